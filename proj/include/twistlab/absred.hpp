#pragma once

#include <string>
#include <vector>

#include "twistlab/classify.hpp"

namespace twistlab {

/// n x n grid of functionals on K^m; entry (i, j) holds omega_ij(f_1..f_m).
class OmegaMatrix {
public:
    OmegaMatrix(const Field& f, std::size_t n, std::size_t m);

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    const Field& field() const { return field_; }
    Functional& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Functional& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    /// The scalar matrix omega(f_q).
    Matrix at_basis(std::size_t q) const;

    friend bool operator==(const OmegaMatrix&, const OmegaMatrix&) = default;

private:
    Field field_;
    std::size_t n_, m_;
    std::vector<Functional> e_;
};

class DegenerateParameters : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotSplitConsistent : public MathError {
public:
    NotSplitConsistent(const std::string& what, int p) : MathError(what), p(p) {}
    int p;
};

/// omega(ab) = omega(a) omega(b) and omega(1) = I on all basis pairs.
bool check_module_axioms(const OmegaMatrix& w);

/// X diag(f*_{u(1)}, ..., f*_{u(n)}) X^-1 over K^m. Throws SingularMatrix.
OmegaMatrix omega_from_diag(const Matrix& X, const IndexMap& u, std::size_t m);

/// Fibers of u listed by increasing image value; each fiber sorted.
class FiberPartition {
public:
    explicit FiberPartition(IndexMap u);

    const IndexMap& u() const { return u_; }
    std::size_t n() const { return u_.size(); }
    std::size_t size() const { return fibers_.size(); }
    const std::vector<int>& fiber(std::size_t k) const { return fibers_[k]; }
    const std::vector<std::vector<int>>& fibers() const { return fibers_; }
    /// Index k of the fiber containing i.
    std::size_t fiber_of(int i) const { return where_[static_cast<std::size_t>(i)]; }

private:
    IndexMap u_;
    std::vector<std::vector<int>> fibers_;
    std::vector<std::size_t> where_;
};

class BlockView {
public:
    BlockView(Matrix x, FiberPartition f);
    /// X^{kl}: rows in F_k, columns in F_l.
    Matrix block(std::size_t k, std::size_t l) const;
    /// X^k: all rows, columns in F_k.
    Matrix column_block(std::size_t k) const;
    const FiberPartition& partition() const { return f_; }
    const Matrix& matrix() const { return x_; }

private:
    Matrix x_;
    FiberPartition f_;
};

BlockView blocks(const Matrix& X, const FiberPartition& f);

/// Invertible with vanishing off-diagonal blocks.
bool hu_by_blocks(const Matrix& Y, const FiberPartition& f);
/// Invertible and commuting with diag(theta_{u(i)}).
bool hu_by_commutant(const Matrix& Y, const FiberPartition& f);
/// Both characterizations; throws std::logic_error if they disagree.
bool is_in_Hu(const Matrix& Y, const FiberPartition& f);

struct NormalizedMatrix {
    Matrix matrix;
    /// sigma[k][r]: position of row r in the stacked (I; Z_k).
    std::vector<std::vector<int>> sigma;
    std::vector<Matrix> Z;
};

/// Orbit representative with identity sub-blocks, using the lexicographically
/// first independent rows of each column block. Throws SingularMatrix.
NormalizedMatrix normalize(const Matrix& X, const FiberPartition& f);

/// X^-1 Y in H_u. Throws SingularMatrix.
bool same_orbit(const Matrix& X, const Matrix& Y, const FiberPartition& f);

enum class CanonicalForm { X1, X2 };

struct Canonical2 {
    CanonicalForm form;
    Scalar x, y;
    /// X1 = (1 x; y 1), X2 = (x 1; 1 y).
    Matrix matrix() const;
};

/// Single fiber: X1(0, 0). Matrices already of form X1, then X2, are
/// returned as they are; otherwise columns are rescaled.
Canonical2 normalize2(const Matrix& X, const FiberPartition& f);

/// The 2 x 2 action with parameters (x, y) and characters f*_{a1}, f*_{a2}.
/// Throws DegenerateParameters when xy = 1.
OmegaMatrix two_dim_action(const Scalar& x, const Scalar& y, int a1, int a2, std::size_t m);

/// omega^p_ij = row p of E_ij, for a grid on two vertices.
std::vector<OmegaMatrix> omegas_from_grid(const EGrid& g);

/// (u, a) recovered from the omega^p, normalized. Throws InvalidInput when
/// some omega^p is not a module structure, NotSplitConsistent otherwise.
CycleDatum extract_cycle_datum(const std::vector<OmegaMatrix>& w);

} // namespace twistlab
