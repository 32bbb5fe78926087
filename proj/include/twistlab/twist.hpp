#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistlab/algebra.hpp"
#include "twistlab/quiver.hpp"

namespace twistlab {

/// Coordinate form (E_ij) of a twisting map K^n (x) A -> A (x) K^n, with
/// tau(e_i (x) a) = sum_j E_ij(a) (x) e_j. Zero entries are stored explicitly.
class EGrid {
public:
    EGrid() = default;
    /// All entries zero, A = K^m.
    EGrid(int n, const Field& f, std::size_t m);
    /// All entries zero over a general algebra A.
    EGrid(int n, Algebra a);

    static EGrid flip(int n, const Field& f, std::size_t m);

    int n() const { return n_; }
    std::size_t m() const { return algebra_.dim(); }
    const Field& field() const { return algebra_.field(); }
    const Algebra& algebra() const { return algebra_; }

    EndoMap& operator()(int i, int j) { return E_[index(i, j)]; }
    const EndoMap& operator()(int i, int j) const { return E_[index(i, j)]; }

    friend bool operator==(const EGrid& a, const EGrid& b)
    {
        return a.n_ == b.n_ && a.algebra_ == b.algebra_ && a.E_ == b.E_;
    }
    /// Lexicographic by entries, (i, j) row-major then matrix entries.
    friend std::strong_ordering operator<=>(const EGrid& a, const EGrid& b);

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }
    int n_ = 0;
    Algebra algebra_;
    std::vector<EndoMap> E_;
};

struct AxiomResult {
    std::string name;
    bool ok = true;
    std::vector<int> witness; // 0-based index tuple of the first violation
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomResult> axioms; // orthogonality, multiplicativity, column_sum, unit
    bool ok() const;
    const AxiomResult* first_failure() const;
};

/// The four pointwise conditions on (E_ij), each on basis elements.
AxiomReport check_axioms(const EGrid& g);

/// Rebuilds tau as a map on basis tensors and checks the four twisting-map
/// identities as compositions of tensor maps.
AxiomReport check_tau_axioms(const EGrid& g);

/// Arrow i -> j iff E_ij != 0.
Quiver quiver_of(const EGrid& g);

/// A quiver with one endomorphism per arrow (arrow order of the quiver).
/// Arrow maps may be zero.
struct QuiverRep {
    Quiver quiver;
    Algebra algebra;
    std::vector<EndoMap> phi;

    /// The map on the loop at i.
    const EndoMap& loop_map(int i) const;
    const EndoMap& arrow_map(int s, int t) const;
};

struct PredicateResult {
    bool ok = true;
    std::string witness;
    explicit operator bool() const { return ok; }
};

PredicateResult check_splitted(const QuiverRep& r);
PredicateResult check_unital(const QuiverRep& r);
PredicateResult check_factorizable(const QuiverRep& r);

/// Removes arrows carrying the zero map.
QuiverRep drop_zero_arrows(QuiverRep r);

class AxiomViolation : public MathError {
public:
    using MathError::MathError;
};

class NotAssociative : public MathError {
public:
    using MathError::MathError;
};

/// Admissible shape plus nonzero arrow maps; the three representation
/// properties are evaluated at construction.
class AdmissiblePair {
public:
    /// Throws on a shape error or a zero arrow map.
    static AdmissiblePair from_rep(QuiverRep r);

    const AdmissibleShape& shape() const { return shape_; }
    const Quiver& quiver() const { return shape_.quiver(); }
    const Algebra& algebra() const { return rep_.algebra; }
    const QuiverRep& rep() const { return rep_; }
    const EndoMap& phi(std::size_t arrow) const { return rep_.phi[arrow]; }
    const EndoMap& loop_map(int i) const { return rep_.loop_map(i); }

    bool splitted() const { return splitted_.ok; }
    bool unital() const { return unital_.ok; }
    bool factorizable() const { return factorizable_.ok; }
    bool is_admissible() const { return splitted() && unital() && factorizable(); }
    const PredicateResult& splitted_report() const { return splitted_; }
    const PredicateResult& unital_report() const { return unital_; }
    const PredicateResult& factorizable_report() const { return factorizable_; }

    friend bool operator==(const AdmissiblePair& a, const AdmissiblePair& b)
    {
        return a.shape_ == b.shape_ && a.rep_.algebra == b.rep_.algebra && a.rep_.phi == b.rep_.phi;
    }

private:
    AdmissiblePair(AdmissibleShape s, QuiverRep r) : shape_(std::move(s)), rep_(std::move(r)) {}
    AdmissibleShape shape_;
    QuiverRep rep_;
    PredicateResult splitted_, unital_, factorizable_;
};

/// Throws AxiomViolation when check_axioms fails.
AdmissiblePair pair_from_grid(const EGrid& g);
EGrid grid_from_pair(const AdmissiblePair& p);
/// E_{s,t} = phi_alpha, every other entry zero.
EGrid grid_from_rep(const QuiverRep& r);

/// Structure constants of A (x)_tau K^n on the basis f_p (x) e_i, index i*m + p.
Algebra twisted_product(const EGrid& g);
/// twisted_product plus exhaustive unit and associativity certification.
Algebra build_twisted_algebra(const EGrid& g, int threads = 1);

/// phi_alpha = Id iff alpha is a loop and rank(t(alpha)) = 1, at every arrow.
bool check_identity_loop_characterization(const AdmissiblePair& p);

} // namespace twistlab
