#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twistlab/twist.hpp"

namespace twistlab {

/// Idempotent u_i per vertex on a reduced-rank-one shape without 2-cycles.
struct RankOneDatum {
    AdmissibleShape shape;
    std::vector<IndexMap> u;
};

/// (u, a) for a 2-cycle. Normalized data have a_p = 0 whenever u(p) = p.
struct CycleDatum {
    IndexMap u;
    std::vector<Scalar> a;
    friend bool operator==(const CycleDatum&, const CycleDatum&) = default;
    friend auto operator<=>(const CycleDatum&, const CycleDatum&) = default;
};

/// Connected reduced-rank-one shape containing a 2-cycle. u[c0] = u[c1] is
/// the cycle function; the other u_i are idempotent.
struct ConnectedCycleDatum {
    AdmissibleShape shape;
    std::vector<IndexMap> u;
    std::vector<Scalar> a;
};

class ConditionViolated : public MathError {
public:
    ConditionViolated(std::string what, int arrow_s = -1, int arrow_t = -1, int p = -1);
    int arrow_s, arrow_t, p;
};

Field field_of(const CycleDatum& d);
/// Sets a_p = 0 at the fixed points of u.
CycleDatum normalize_cycle_datum(CycleDatum d);
/// The first failing condition of a normalized datum, if any.
std::optional<std::string> cycle_condition_violation(const CycleDatum& d);

struct CycleMaps {
    EndoMap phi1, phi2, alpha1, alpha2;
};
/// The loop and arrow maps of the 2-cycle built from (u, a).
CycleMaps cycle_maps(const CycleDatum& d);

/// The 2-cycle between `first` and `second`; alpha_1 runs first -> second.
struct CycleAssignment {
    int first = 0;
    int second = 1;
    std::vector<Scalar> a;
};

/// Representation of a reduced-rank-one shape: 2-cycles take (u, a) from
/// `cycles`, every other vertex takes the algebra map of u_i, and each
/// remaining non-loop arrow gets Id - phi_t. Zero arrow maps are kept.
/// Throws ConditionViolated when the data do not define a valid pair.
QuiverRep rep_from_rrank1_data(const AdmissibleShape& shape, const std::vector<IndexMap>& u,
                               const std::vector<CycleAssignment>& cycles, const Field& f);

/// First condition the data break, or nullopt.
std::optional<ConditionViolated> rrank1_violation(const AdmissibleShape& shape,
                                                  const std::vector<IndexMap>& u,
                                                  const std::vector<CycleAssignment>& cycles);

AdmissiblePair rep_from_rank1_datum(const RankOneDatum& d, const Field& f);
AdmissiblePair rep_from_cycle_datum(const CycleDatum& d);
AdmissiblePair rep_from_connected_cycle(const ConnectedCycleDatum& d);

/// Tuples of idempotent functions meeting the arrow condition, lexicographic.
std::vector<RankOneDatum> enumerate_rank1_data(const AdmissibleShape& shape, int m);

/// Solution set of the cycle conditions for one u and one choice of
/// {0,1}-values on D = {p : u(p) != p, u(u(p)) != p}: a = base + sum t_k dir_k,
/// where parameter t_k is the coordinate a_{free[k]}.
struct CycleFamily {
    IndexMap u;
    std::vector<Scalar> base;
    std::vector<std::vector<Scalar>> directions;
    std::vector<int> free;
};

std::vector<CycleFamily> cycle_families(int m, const Field& f);
CycleDatum instantiate(const CycleFamily& fam, const std::vector<Scalar>& params);

/// Every normalized datum over a prime field, sorted.
std::vector<CycleDatum> enumerate_cycle_data(int m, const Field& f);

/// Small random rationals num/den with |num| <= 9, 1 <= den <= 9.
Scalar random_rational(std::mt19937_64& rng);
/// Uniform over F_p; random_rational over Q.
Scalar random_scalar(const Field& f, std::mt19937_64& rng);

/// How free parameters are filled over the rationals.
struct Sampling {
    int samples = 0;
    std::mt19937_64* rng = nullptr;
};

/// Cycle data: exhaustive over F_p; over Q each family is instantiated
/// `samples` times (families without parameters once).
std::vector<CycleDatum> cycle_data(int m, const Field& f, const Sampling& s = {});

/// Every grid generated from the shape (arrow maps may vanish, so the
/// resulting quivers can be smaller). Sorted, duplicate-free.
std::vector<EGrid> classify_shape(const AdmissibleShape& shape, int m, const Field& f,
                                  const Sampling& s = {});

/// Union of classify_shape over every admissible shape on n vertices with
/// rrank <= 1. Sorted, duplicate-free.
std::vector<EGrid> classify_all(int n, int m, const Field& f, const Sampling& s = {});

/// flip, the two single-arrow shapes, and the 2-cycle, for n = 2.
std::vector<EGrid> classify_two_vertices(int m, const Field& f, const Sampling& s = {});

struct IdealDecomposition {
    std::vector<Vector> image;  // B_i = Im phi_i
    std::vector<Vector> kernel; // M_i = Ker phi_i
    bool direct_sum = false;    // A = B_i (+) M_i
    bool kernel_is_ideal = false;
    bool image_is_subalgebra = false;
};

IdealDecomposition ideal_decomposition(const AdmissiblePair& p, int vertex);

/// M_s M_t = 0 for every non-loop arrow; first offending arrow otherwise.
std::optional<Arrow> ideal_product_violation(const AdmissiblePair& p);

} // namespace twistlab
