#include "twistlab/hochschild.hpp"

#include <string>

namespace twistlab {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

Matrix combine(const Field& f, std::size_t n, std::span<const Matrix> ms, const Vector& coeff)
{
    Matrix out = Matrix::zero(f, n);
    for (std::size_t k = 0; k < ms.size(); ++k)
        if (!coeff[k].is_zero())
            out += coeff[k] * ms[k];
    return out;
}

Vector omega_at(const HochschildData& h, const Vector& x, std::size_t c, bool left_slot)
{
    Vector out(h.field(), h.dim_m);
    for (std::size_t t = 0; t < h.B.dim(); ++t)
        if (!x[t].is_zero())
            out += x[t] * (left_slot ? h.w(t, c) : h.w(c, t));
    return out;
}

void check_dimensions(const HochschildData& h)
{
    const std::size_t db = h.B.dim(), dm = h.dim_m;
    if (h.left.size() != db || h.right.size() != db)
        throw DimensionMismatch("one left and one right action per basis element of B");
    for (const auto* side : {&h.left, &h.right})
        for (const auto& a : *side) {
            if (a.rows() != dm || a.cols() != dm)
                throw DimensionMismatch("action matrices must be dim M x dim M");
            if (!(a.field() == h.field()))
                throw FieldMismatch("action matrix over a different field");
        }
    if (h.omega.size() != db * db)
        throw DimensionMismatch("omega needs dim B * dim B values");
    for (const auto& v : h.omega) {
        if (v.size() != dm)
            throw DimensionMismatch("omega values must lie in M");
        if (!(v.field() == h.field()))
            throw FieldMismatch("omega value over a different field");
    }
}

Algebra extension_unchecked(const HochschildData& h)
{
    const Field& F = h.field();
    const std::size_t db = h.B.dim(), dm = h.dim_m, d = db + dm;
    std::vector<Vector> table(d * d, Vector(F, d));
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            Vector& v = table[i * d + j];
            const Vector& bb = h.B.product(i, j);
            for (std::size_t k = 0; k < db; ++k)
                v[k] = bb[k];
            for (std::size_t k = 0; k < dm; ++k)
                v[db + k] = h.w(i, j)[k];
        }
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t k = 0; k < dm; ++k) {
            Vector lm = h.left[i].column(k), rm = h.right[i].column(k);
            for (std::size_t r = 0; r < dm; ++r) {
                table[i * d + db + k][db + r] = lm[r];
                table[(db + k) * d + i][db + r] = rm[r];
            }
        }
    Vector unit(F, d);
    for (std::size_t k = 0; k < db; ++k)
        unit[k] = h.B.unit()[k];
    return Algebra(F, d, std::move(table), std::move(unit));
}

std::vector<Vector> solve_homogeneous(const Field& f, std::size_t unknowns, std::span<const Vector> rows)
{
    if (rows.empty()) {
        std::vector<Vector> out;
        for (std::size_t k = 0; k < unknowns; ++k)
            out.push_back(Vector::basis(f, unknowns, k));
        return out;
    }
    return kernel_basis(Matrix::from_rows(f, unknowns, rows));
}

Vector random_combination(const Field& f, std::size_t n, std::span<const Vector> basis, std::mt19937_64& rng)
{
    Vector out(f, n);
    for (const auto& b : basis)
        out += random_scalar(f, rng) * b;
    return out;
}

Matrix unvec(const Field& f, std::size_t n, const Vector& v)
{
    Matrix m = Matrix::zero(f, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = v[r * n + c];
    return m;
}

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng)
{
    while (true) {
        Matrix s = Matrix::zero(f, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                s(r, c) = random_scalar(f, rng);
        if (try_inverse(s))
            return s;
    }
}

} // namespace

void check_hochschild_data(const HochschildData& h)
{
    check_dimensions(h);
    const Field& F = h.field();
    const std::size_t db = h.B.dim(), dm = h.dim_m;
    const Matrix id = Matrix::identity(F, dm);
    if (combine(F, dm, h.left, h.B.unit()) != id || combine(F, dm, h.right, h.B.unit()) != id)
        throw NotABimodule("the unit of B does not act as the identity");
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            const Vector& bb = h.B.product(i, j);
            if (combine(F, dm, h.left, bb) != h.left[i] * h.left[j])
                throw NotABimodule("left action not multiplicative at (" + idx(i) + ", " + idx(j) + ")");
            if (combine(F, dm, h.right, bb) != h.right[j] * h.right[i])
                throw NotABimodule("right action not multiplicative at (" + idx(i) + ", " + idx(j) + ")");
            if (h.left[i] * h.right[j] != h.right[j] * h.left[i])
                throw NotABimodule("left and right actions do not commute at (" + idx(i) + ", " + idx(j) + ")");
        }
    for (std::size_t i = 0; i < db; ++i) {
        if (!omega_at(h, h.B.unit(), i, false).is_zero())
            throw NotACocycle("omega(b_" + idx(i) + " (x) 1) != 0");
        if (!omega_at(h, h.B.unit(), i, true).is_zero())
            throw NotACocycle("omega(1 (x) b_" + idx(i) + ") != 0");
    }
    for (std::size_t a = 0; a < db; ++a)
        for (std::size_t b = 0; b < db; ++b)
            for (std::size_t c = 0; c < db; ++c) {
                Vector v = h.left[a] * h.w(b, c);
                v -= omega_at(h, h.B.product(a, b), c, true);
                v += omega_at(h, h.B.product(b, c), a, false);
                v -= h.right[c] * h.w(a, b);
                if (!v.is_zero())
                    throw NotACocycle("cocycle identity fails at (" + idx(a) + ", " + idx(b) + ", " + idx(c) + ")",
                                      Triple{a, b, c});
            }
}

Algebra hochschild_extension(const HochschildData& h)
{
    check_hochschild_data(h);
    return extension_unchecked(h);
}

PhiFromF phi_from_f(const HochschildData& h, const Matrix& f)
{
    check_dimensions(h);
    const Field& F = h.field();
    const std::size_t db = h.B.dim(), dm = h.dim_m;
    if (f.rows() != dm || f.cols() != dm)
        throw DimensionMismatch("f must be an endomorphism of M");
    PhiFromF r;
    r.phi = Matrix::identity(F, db + dm);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dm; ++j)
            r.phi(db + i, db + j) = f(i, j);
    r.bimodule_morphism = true;
    for (std::size_t i = 0; i < db && r.bimodule_morphism; ++i)
        r.bimodule_morphism = f * h.left[i] == h.left[i] * f && f * h.right[i] == h.right[i] * f;
    r.fixes_omega = true;
    for (const auto& w : h.omega)
        if (f * w != w) {
            r.fixes_omega = false;
            break;
        }
    r.predicted_algebra_map = r.bimodule_morphism && r.fixes_omega;
    r.algebra_map = is_algebra_map(extension_unchecked(h), r.phi);
    r.f_idempotent = is_idempotent(f);
    r.idempotent = is_idempotent(r.phi);
    r.kernel_in_m = true;
    for (const auto& k : kernel_basis(r.phi))
        for (std::size_t i = 0; i < db; ++i)
            if (!k[i].is_zero())
                r.kernel_in_m = false;
    return r;
}

AdmissiblePair rep_from_hochschild_family(const HochschildData& h, const AdmissibleShape& shape,
                                          const std::vector<Matrix>& fs)
{
    check_hochschild_data(h);
    const Quiver& q = shape.quiver();
    const int n = q.n();
    if (q.rrank() > 1)
        throw InvalidInput("the shape must have reduced rank at most one");
    for (const auto& a : q.arrows())
        if (!a.is_loop() && q.has_arrow(a.t, a.s))
            throw InvalidInput("the shape must not contain a 2-cycle");
    if (static_cast<int>(fs.size()) != n)
        throw DimensionMismatch("one endomorphism of M per vertex required");
    const Field& F = h.field();
    const std::size_t dm = h.dim_m;
    std::vector<EndoMap> vertex_map;
    for (int i = 0; i < n; ++i) {
        const Matrix& f = fs[static_cast<std::size_t>(i)];
        if (f.rows() != dm || f.cols() != dm)
            throw DimensionMismatch("f_" + idx(static_cast<std::size_t>(i)) + " must be an endomorphism of M");
        const std::string name = "f_" + idx(static_cast<std::size_t>(i));
        if (!is_idempotent(f))
            throw ConditionViolated(name + " is not idempotent");
        auto lift = phi_from_f(h, f);
        if (!lift.bimodule_morphism)
            throw ConditionViolated(name + " is not a bimodule morphism");
        if (!lift.fixes_omega)
            throw ImageConditionViolated("Im omega is not contained in Im " + name, i);
        if (q.rrank(i) == 0 && !f.is_identity())
            throw ConditionViolated("vertex " + idx(static_cast<std::size_t>(i)) +
                                    " receives only its loop, so " + name + " must be the identity");
        vertex_map.push_back(std::move(lift.phi));
    }
    Algebra A = extension_unchecked(h);
    const EndoMap id = EndoMap::identity(F, A.dim());
    QuiverRep rep{q, A, {}};
    for (const auto& a : q.arrows())
        rep.phi.push_back(a.is_loop() ? vertex_map[static_cast<std::size_t>(a.s)]
                                      : id - vertex_map[static_cast<std::size_t>(a.t)]);
    return AdmissiblePair::from_rep(drop_zero_arrows(std::move(rep)));
}

KernelProducts kernel_products(const AdmissiblePair& p, const Arrow& a)
{
    if (a.is_loop() || !p.quiver().has_arrow(a.s, a.t))
        throw InvalidInput("kernel products need a non-loop arrow of the quiver");
    auto ks = kernel_basis(p.loop_map(a.s));
    auto kt = kernel_basis(p.loop_map(a.t));
    return {subspace_product_is_zero(p.algebra(), ks, kt), subspace_product_is_zero(p.algebra(), kt, ks)};
}

std::vector<std::vector<Vector>> cocycle_basis(const HochschildData& h)
{
    check_dimensions(h);
    const Field& F = h.field();
    const std::size_t db = h.B.dim(), dm = h.dim_m;
    const std::size_t unknowns = db * db * dm;
    auto var = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * db + j) * dm + k; };
    std::vector<Vector> rows;
    const Vector& one = h.B.unit();
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t k = 0; k < dm; ++k) {
            Vector r1(F, unknowns), r2(F, unknowns);
            for (std::size_t t = 0; t < db; ++t) {
                r1[var(i, t, k)] += one[t];
                r2[var(t, i, k)] += one[t];
            }
            rows.push_back(r1);
            rows.push_back(r2);
        }
    for (std::size_t a = 0; a < db; ++a)
        for (std::size_t b = 0; b < db; ++b)
            for (std::size_t c = 0; c < db; ++c)
                for (std::size_t k = 0; k < dm; ++k) {
                    Vector r(F, unknowns);
                    for (std::size_t l = 0; l < dm; ++l) {
                        r[var(b, c, l)] += h.left[a](k, l);
                        r[var(a, b, l)] -= h.right[c](k, l);
                    }
                    const Vector& ab = h.B.product(a, b);
                    const Vector& bc = h.B.product(b, c);
                    for (std::size_t t = 0; t < db; ++t) {
                        r[var(t, c, k)] -= ab[t];
                        r[var(a, t, k)] += bc[t];
                    }
                    rows.push_back(r);
                }
    std::vector<std::vector<Vector>> out;
    for (const auto& sol : solve_homogeneous(F, unknowns, rows)) {
        std::vector<Vector> w(db * db, Vector(F, dm));
        for (std::size_t i = 0; i < db; ++i)
            for (std::size_t j = 0; j < db; ++j)
                for (std::size_t k = 0; k < dm; ++k)
                    w[i * db + j][k] = sol[var(i, j, k)];
        out.push_back(std::move(w));
    }
    return out;
}

HochschildData random_hochschild_data(const Field& f, std::size_t dim_b, std::size_t dim_m, std::mt19937_64& rng)
{
    if (dim_b < 1 || dim_b > 2)
        throw InvalidInput("random instances support dim B in {1, 2}");
    HochschildData h;
    h.dim_m = dim_m;
    const Matrix id = Matrix::identity(f, dim_m);
    const Matrix s = random_invertible(f, dim_m, rng);
    const Matrix si = inverse(s);
    std::bernoulli_distribution coin(0.5);
    if (dim_b == 1) {
        h.B = Algebra(f, 1, {Vector::ones(f, 1)}, Vector::ones(f, 1));
        h.left = {id};
        h.right = {id};
    } else if (coin(rng)) {
        h.B = Algebra::diagonal(f, 2);
        Matrix P = Matrix::zero(f, dim_m), Q = Matrix::zero(f, dim_m);
        for (std::size_t k = 0; k < dim_m; ++k) {
            P(k, k) = coin(rng) ? f.one() : f.zero();
            Q(k, k) = coin(rng) ? f.one() : f.zero();
        }
        P = s * P * si;
        Q = s * Q * si;
        h.left = {P, id - P};
        h.right = {Q, id - Q};
    } else {
        // K[x]/(x^2) on the basis 1, x.
        std::vector<Vector> table(4, Vector(f, 2));
        table[0][0] = f.one();
        table[1][1] = f.one();
        table[2][1] = f.one();
        h.B = Algebra(f, 2, std::move(table), Vector::basis(f, 2, 0));
        auto nil = [&]() {
            Matrix N = Matrix::zero(f, dim_m);
            if (dim_m >= 2 && coin(rng))
                N(0, dim_m - 1) = f.one();
            return s * N * si;
        };
        h.left = {id, nil()};
        h.right = {id, nil()};
    }
    h.omega.assign(dim_b * dim_b, Vector(f, dim_m));
    for (const auto& w : cocycle_basis(h)) {
        Scalar c = random_scalar(f, rng);
        for (std::size_t k = 0; k < w.size(); ++k)
            h.omega[k] += c * w[k];
    }
    return h;
}

namespace {

// Basis of {e : e commutes with every action}, and of {e : additionally e omega = 0}
// when `kill_omega`; e(r, c) sits at index r * dm + c.
std::vector<Vector> commutant_basis(const HochschildData& h, bool kill_omega)
{
    const Field& F = h.field();
    const std::size_t dm = h.dim_m, unknowns = dm * dm;
    std::vector<Vector> rows;
    for (const auto* side : {&h.left, &h.right})
        for (const auto& a : *side)
            for (std::size_t r = 0; r < dm; ++r)
                for (std::size_t c = 0; c < dm; ++c) {
                    Vector row(F, unknowns);
                    for (std::size_t k = 0; k < dm; ++k) {
                        row[r * dm + k] += a(k, c);
                        row[k * dm + c] -= a(r, k);
                    }
                    rows.push_back(row);
                }
    if (kill_omega)
        for (const auto& w : h.omega)
            for (std::size_t r = 0; r < dm; ++r) {
                Vector row(F, unknowns);
                for (std::size_t k = 0; k < dm; ++k)
                    row[r * dm + k] += w[k];
                rows.push_back(row);
            }
    return solve_homogeneous(F, unknowns, rows);
}

} // namespace

Matrix random_m_endomorphism(const HochschildData& h, EndoKind kind, std::mt19937_64& rng)
{
    check_dimensions(h);
    const Field& F = h.field();
    const std::size_t dm = h.dim_m;
    if (kind == EndoKind::any) {
        Matrix m = Matrix::zero(F, dm);
        for (std::size_t r = 0; r < dm; ++r)
            for (std::size_t c = 0; c < dm; ++c)
                m(r, c) = random_scalar(F, rng);
        return m;
    }
    auto basis = commutant_basis(h, kind == EndoKind::lift);
    Matrix e = unvec(F, dm, random_combination(F, dm * dm, basis, rng));
    return kind == EndoKind::lift ? Matrix::identity(F, dm) - e : e;
}

Matrix random_idempotent_lift(const HochschildData& h, std::mt19937_64& rng)
{
    check_dimensions(h);
    const Field& F = h.field();
    const std::size_t dm = h.dim_m;
    auto basis = commutant_basis(h, true);
    Matrix e = unvec(F, dm, random_combination(F, dm * dm, basis, rng));
    // Fitting projector onto Im e^d along Ker e^d: a polynomial in e.
    Matrix ed = Matrix::identity(F, dm);
    for (std::size_t k = 0; k < dm; ++k)
        ed = ed * e;
    auto im = image_basis(ed);
    auto ker = kernel_basis(ed);
    std::vector<Vector> cols = im;
    cols.insert(cols.end(), ker.begin(), ker.end());
    Matrix S = Matrix::from_columns(F, dm, cols);
    Matrix D = Matrix::zero(F, dm);
    for (std::size_t k = 0; k < im.size(); ++k)
        D(k, k) = F.one();
    return Matrix::identity(F, dm) - S * D * inverse(S);
}

} // namespace twistlab
