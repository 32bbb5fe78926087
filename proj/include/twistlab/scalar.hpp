#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "twistlab/error.hpp"

namespace twistlab {

class Scalar;

namespace detail {
// Immutable per-prime lookup data, interned for the lifetime of the process.
struct PrimeTable {
    std::uint32_t p;
    std::vector<std::uint32_t> inverse; // inverse[0] unused
};
const PrimeTable* prime_table(std::uint32_t p);
} // namespace detail

bool is_prime(std::uint64_t n);

/// The ground field: either the rationals or F_p.
class Field {
public:
    enum class Kind { rationals, prime };

    Field() = default; // rationals
    static Field rationals() { return Field{}; }
    static Field prime(std::uint32_t p);

    /// Accepts the CLI spelling: "q" or "p:<prime>".
    static Field parse(std::string_view text);

    Kind kind() const { return table_ ? Kind::prime : Kind::rationals; }
    bool is_prime_field() const { return table_ != nullptr; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const { return table_ ? table_->p : 0; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_rational(const mpq_class& q) const;

    std::string to_string() const;

    friend bool operator==(const Field& a, const Field& b) { return a.table_ == b.table_; }

private:
    explicit Field(const detail::PrimeTable* t) : table_(t) {}
    const detail::PrimeTable* table_ = nullptr;
    friend class Scalar;
};

/// Exact field element. Residues carry their prime; arithmetic across fields
/// throws FieldMismatch.
class Scalar {
public:
    struct Residue {
        std::uint32_t value;
        const detail::PrimeTable* table;
    };

    Scalar() : v_(mpq_class(0)) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
    Scalar(Residue r) : v_(r) {}

    Field field() const;
    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    std::uint32_t residue() const { return std::get<Residue>(v_).value; }

    bool is_zero() const;
    bool is_one() const;

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    // Total order within one field: residues by representative, rationals by value.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    /// "num/den" for rationals, decimal residue for F_p.
    std::string to_string() const;

private:
    std::variant<mpq_class, Residue> v_;
    void require_same(const Scalar& o) const;
};

/// Reduce a rational with denominator prime to p into F_p.
Scalar reduce_mod(const Scalar& q, const Field& target);

} // namespace twistlab
