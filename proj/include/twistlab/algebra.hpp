#pragma once

#include <array>
#include <optional>
#include <vector>

#include "twistlab/linalg.hpp"

namespace twistlab {

/// Finite-dimensional unital algebra given by structure constants on a
/// fixed basis b_0..b_{d-1}: product(i, j) holds the coordinates of b_i b_j.
class Algebra {
public:
    Algebra() = default;
    Algebra(Field f, std::size_t dim, std::vector<Vector> table, Vector unit);

    /// K^m with its idempotent basis f_1..f_m.
    static Algebra diagonal(Field f, std::size_t m);

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const Vector& unit() const { return unit_; }
    const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    bool is_diagonal() const { return diagonal_; }

    Vector multiply(const Vector& a, const Vector& b) const;

    friend bool operator==(const Algebra& a, const Algebra& b)
    {
        return a.dim_ == b.dim_ && a.field_ == b.field_ && a.unit_ == b.unit_ && a.table_ == b.table_;
    }

private:
    Field field_;
    std::size_t dim_ = 0;
    std::vector<Vector> table_;
    Vector unit_;
    bool diagonal_ = false;
};

using Triple = std::array<std::size_t, 3>;

/// First basis triple (lexicographic) with (b_i b_j) b_k != b_i (b_j b_k).
std::optional<Triple> find_associativity_violation(const Algebra& a);
/// Same answer as the serial scan; work split over the first index.
std::optional<Triple> find_associativity_violation_parallel(const Algebra& a, int threads = 0);
/// First basis index i with 1*b_i != b_i or b_i*1 != b_i.
std::optional<std::size_t> find_unit_violation(const Algebra& a);

/// f(1) = 1 and f(b_i b_j) = f(b_i) f(b_j) on all basis pairs.
bool is_algebra_map(const Algebra& a, const Matrix& f);

/// True iff x*y = 0 for every x in U, y in V.
bool subspace_product_is_zero(const Algebra& a, std::span<const Vector> U, std::span<const Vector> V);

} // namespace twistlab
