#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twistlab/classify.hpp"

namespace twistlab {

/// B, a B-bimodule M with basis m_0..m_{d-1}, and omega : B x B -> M.
/// left[i] and right[i] act by b_i on the left and on the right;
/// omega[i * dim B + j] = omega(b_i (x) b_j).
struct HochschildData {
    Algebra B;
    std::size_t dim_m = 0;
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    std::vector<Vector> omega;

    const Field& field() const { return B.field(); }
    const Vector& w(std::size_t i, std::size_t j) const { return omega[i * B.dim() + j]; }
};

class NotABimodule : public MathError {
public:
    explicit NotABimodule(const std::string& what) : MathError(what) {}
};

class NotACocycle : public MathError {
public:
    NotACocycle(const std::string& what, std::optional<Triple> t = std::nullopt) : MathError(what), triple(t)
    {
    }
    /// Basis triple breaking the cocycle identity; empty for normalization.
    std::optional<Triple> triple;
};

class ImageConditionViolated : public MathError {
public:
    ImageConditionViolated(const std::string& what, int vertex) : MathError(what), vertex(vertex) {}
    int vertex;
};

/// Throws DimensionMismatch, NotABimodule or NotACocycle.
void check_hochschild_data(const HochschildData& h);

/// B (+) M with (b,m)(b',m') = (bb', bm' + mb' + omega(b,b')); basis is
/// B's basis followed by M's.
Algebra hochschild_extension(const HochschildData& h);

struct PhiFromF {
    EndoMap phi;
    bool bimodule_morphism = false;
    bool fixes_omega = false;
    bool predicted_algebra_map = false;
    bool algebra_map = false;
    bool f_idempotent = false;
    bool idempotent = false;
    bool kernel_in_m = false;
};

/// phi(b, m) = (b, f(m)) together with both sides of the lift criterion.
PhiFromF phi_from_f(const HochschildData& h, const Matrix& f);

/// Pair over the extension with phi_i lifted from fs[i] and
/// phi_alpha = Id - phi_t(alpha); zero arrow maps are dropped.
AdmissiblePair rep_from_hochschild_family(const HochschildData& h, const AdmissibleShape& shape,
                                          const std::vector<Matrix>& fs);

/// Whether Ker phi_s Ker phi_t and Ker phi_t Ker phi_s vanish for a non-loop arrow.
struct KernelProducts {
    bool source_target = false;
    bool target_source = false;
};
KernelProducts kernel_products(const AdmissiblePair& p, const Arrow& a);

/// Small instance: B is K, K x K or K[x]/(x^2) (chosen by dim_b and rng),
/// M a random bimodule of dimension dim_m, omega a random normalized cocycle.
HochschildData random_hochschild_data(const Field& f, std::size_t dim_b, std::size_t dim_m,
                                      std::mt19937_64& rng);

/// Basis of normalized cocycles B x B -> M.
std::vector<std::vector<Vector>> cocycle_basis(const HochschildData& h);

enum class EndoKind { any, bimodule, lift };

/// Random endomorphism of M: unconstrained, a bimodule morphism, or a
/// bimodule morphism fixing the image of omega.
Matrix random_m_endomorphism(const HochschildData& h, EndoKind kind, std::mt19937_64& rng);

/// Random idempotent bimodule morphism fixing the image of omega.
Matrix random_idempotent_lift(const HochschildData& h, std::mt19937_64& rng);

} // namespace twistlab
