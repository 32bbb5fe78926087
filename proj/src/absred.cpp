#include "twistlab/absred.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace twistlab {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

void require_square(const Matrix& X, std::size_t n, const char* what)
{
    if (X.rows() != n || X.cols() != n)
        throw DimensionMismatch(std::string(what) + " must be " + std::to_string(n) + " x " + std::to_string(n));
}

Matrix character_diag(const Field& F, const IndexMap& u, std::size_t q)
{
    Matrix d = Matrix::zero(F, u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        if (static_cast<std::size_t>(u[i]) == q)
            d(i, i) = F.one();
    return d;
}

} // namespace

OmegaMatrix::OmegaMatrix(const Field& f, std::size_t n, std::size_t m)
    : field_(f), n_(n), m_(m), e_(n * n, Functional(f, m))
{
}

Matrix OmegaMatrix::at_basis(std::size_t q) const
{
    Matrix out = Matrix::zero(field_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            out(i, j) = (*this)(i, j)[q];
    return out;
}

bool check_module_axioms(const OmegaMatrix& w)
{
    const Field& F = w.field();
    const std::size_t n = w.n(), m = w.m();
    std::vector<Matrix> at;
    Matrix sum = Matrix::zero(F, n);
    for (std::size_t q = 0; q < m; ++q) {
        at.push_back(w.at_basis(q));
        sum += at.back();
    }
    if (!sum.is_identity())
        return false;
    const Matrix zero = Matrix::zero(F, n);
    for (std::size_t q = 0; q < m; ++q)
        for (std::size_t r = 0; r < m; ++r)
            if (at[q] * at[r] != (q == r ? at[q] : zero))
                return false;
    return true;
}

OmegaMatrix omega_from_diag(const Matrix& X, const IndexMap& u, std::size_t m)
{
    const std::size_t n = X.rows();
    require_square(X, n, "X");
    if (u.size() != n)
        throw DimensionMismatch("u needs one value per row of X");
    for (int v : u)
        if (v < 0 || static_cast<std::size_t>(v) >= m)
            throw InvalidInput("character index out of range");
    const Field& F = X.field();
    const Matrix Xi = inverse(X);
    OmegaMatrix w(F, n, m);
    for (std::size_t q = 0; q < m; ++q) {
        Matrix a = X * character_diag(F, u, q) * Xi;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                w(i, j)[q] = a(i, j);
    }
    return w;
}

FiberPartition::FiberPartition(IndexMap u) : u_(std::move(u)), where_(u_.size())
{
    std::map<int, std::vector<int>> by_value;
    for (std::size_t i = 0; i < u_.size(); ++i) {
        if (u_[i] < 0)
            throw InvalidInput("function values must be non-negative");
        by_value[u_[i]].push_back(static_cast<int>(i));
    }
    for (auto& [v, fiber] : by_value) {
        for (int i : fiber)
            where_[static_cast<std::size_t>(i)] = fibers_.size();
        fibers_.push_back(std::move(fiber));
    }
}

BlockView::BlockView(Matrix x, FiberPartition f) : x_(std::move(x)), f_(std::move(f))
{
    require_square(x_, f_.n(), "the matrix");
}

Matrix BlockView::block(std::size_t k, std::size_t l) const
{
    const auto& rows = f_.fiber(k);
    const auto& cols = f_.fiber(l);
    Matrix out(x_.field(), rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            out(r, c) = x_(static_cast<std::size_t>(rows[r]), static_cast<std::size_t>(cols[c]));
    return out;
}

Matrix BlockView::column_block(std::size_t k) const
{
    const auto& cols = f_.fiber(k);
    Matrix out(x_.field(), x_.rows(), cols.size());
    for (std::size_t r = 0; r < x_.rows(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            out(r, c) = x_(r, static_cast<std::size_t>(cols[c]));
    return out;
}

BlockView blocks(const Matrix& X, const FiberPartition& f) { return BlockView(X, f); }

bool hu_by_blocks(const Matrix& Y, const FiberPartition& f)
{
    require_square(Y, f.n(), "Y");
    for (std::size_t r = 0; r < Y.rows(); ++r)
        for (std::size_t c = 0; c < Y.cols(); ++c)
            if (f.fiber_of(static_cast<int>(r)) != f.fiber_of(static_cast<int>(c)) && !Y(r, c).is_zero())
                return false;
    return try_inverse(Y).has_value();
}

bool hu_by_commutant(const Matrix& Y, const FiberPartition& f)
{
    require_square(Y, f.n(), "Y");
    const std::size_t r = f.u().empty() ? 0 : static_cast<std::size_t>(*std::max_element(f.u().begin(), f.u().end())) + 1;
    for (std::size_t q = 0; q < r; ++q) {
        Matrix d = character_diag(Y.field(), f.u(), q);
        if (Y * d != d * Y)
            return false;
    }
    return try_inverse(Y).has_value();
}

bool is_in_Hu(const Matrix& Y, const FiberPartition& f)
{
    bool a = hu_by_blocks(Y, f);
    if (a != hu_by_commutant(Y, f))
        throw std::logic_error("H_u characterizations disagree");
    return a;
}

NormalizedMatrix normalize(const Matrix& X, const FiberPartition& f)
{
    const std::size_t n = f.n();
    require_square(X, n, "X");
    if (!try_inverse(X))
        throw SingularMatrix("X is not invertible");
    const Field& F = X.field();
    BlockView view(X, f);
    NormalizedMatrix out{X, {}, {}};
    for (std::size_t k = 0; k < f.size(); ++k) {
        const auto& cols = f.fiber(k);
        const std::size_t nk = cols.size();
        Matrix Xk = view.column_block(k);
        std::vector<Vector> chosen;
        std::vector<std::size_t> picked;
        for (std::size_t r = 0; r < n && chosen.size() < nk; ++r) {
            chosen.push_back(Xk.row(r));
            if (rank(Matrix::from_rows(F, nk, chosen)) == chosen.size())
                picked.push_back(r);
            else
                chosen.pop_back();
        }
        Matrix Yk_inv = inverse(Matrix::from_rows(F, nk, chosen));
        Matrix Xbar = Xk * Yk_inv;
        std::vector<int> sigma(n);
        std::vector<Vector> zrows;
        std::size_t next = nk;
        for (std::size_t r = 0; r < n; ++r) {
            auto it = std::find(picked.begin(), picked.end(), r);
            if (it != picked.end()) {
                sigma[r] = static_cast<int>(it - picked.begin());
            } else {
                sigma[r] = static_cast<int>(next++);
                zrows.push_back(Xbar.row(r));
            }
        }
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < nk; ++c)
                out.matrix(r, static_cast<std::size_t>(cols[c])) = Xbar(r, c);
        out.sigma.push_back(std::move(sigma));
        out.Z.push_back(zrows.empty() ? Matrix(F, 0, nk) : Matrix::from_rows(F, nk, zrows));
    }
    return out;
}

bool same_orbit(const Matrix& X, const Matrix& Y, const FiberPartition& f)
{
    require_square(X, f.n(), "X");
    require_square(Y, f.n(), "Y");
    if (!try_inverse(Y))
        throw SingularMatrix("Y is not invertible");
    return is_in_Hu(inverse(X) * Y, f);
}

Matrix Canonical2::matrix() const
{
    const Field F = x.field();
    Matrix X = Matrix::zero(F, 2);
    if (form == CanonicalForm::X1) {
        X(0, 0) = F.one();
        X(0, 1) = x;
        X(1, 0) = y;
        X(1, 1) = F.one();
    } else {
        X(0, 0) = x;
        X(0, 1) = F.one();
        X(1, 0) = F.one();
        X(1, 1) = y;
    }
    return X;
}

Canonical2 normalize2(const Matrix& X, const FiberPartition& f)
{
    require_square(X, 2, "X");
    if (f.n() != 2)
        throw DimensionMismatch("normalize2 needs a function on two points");
    if (!try_inverse(X))
        throw SingularMatrix("X is not invertible");
    const Field& F = X.field();
    if (f.size() == 1)
        return {CanonicalForm::X1, F.zero(), F.zero()};
    if (X(0, 0).is_one() && X(1, 1).is_one())
        return {CanonicalForm::X1, X(0, 1), X(1, 0)};
    if (X(0, 1).is_one() && X(1, 0).is_one())
        return {CanonicalForm::X2, X(0, 0), X(1, 1)};
    // Two singleton fibers: H_u is the diagonal group, so scale each column
    // by the inverse of its first nonzero entry.
    auto scaled = [&](std::size_t c) {
        Vector v = X.column(c);
        v *= (v[0].is_zero() ? v[1] : v[0]).inverse();
        return v;
    };
    Vector c0 = scaled(0), c1 = scaled(1);
    if (c0[0].is_one() && c1[0].is_one()) {
        // (1 1; x1 y1)
        if (!c0[1].is_zero())
            return {CanonicalForm::X2, c0[1].inverse(), c1[1]};
        return {CanonicalForm::X1, c1[1].inverse(), F.zero()};
    }
    if (c0[0].is_one()) // (1 0; y 1)
        return {CanonicalForm::X1, F.zero(), c0[1]};
    // (0 1; 1 w)
    return {CanonicalForm::X2, F.zero(), c1[1]};
}

OmegaMatrix two_dim_action(const Scalar& x, const Scalar& y, int a1, int a2, std::size_t m)
{
    if (!(x.field() == y.field()))
        throw FieldMismatch("x and y lie in different fields");
    if (a1 < 0 || a2 < 0 || static_cast<std::size_t>(a1) >= m || static_cast<std::size_t>(a2) >= m)
        throw InvalidInput("character index out of range");
    const Field F = x.field();
    Scalar xy = x * y;
    if (xy.is_one())
        throw DegenerateParameters("xy = 1");
    Scalar d = (F.one() - xy).inverse();
    Functional al1 = Vector::basis(F, m, static_cast<std::size_t>(a1));
    Functional al2 = Vector::basis(F, m, static_cast<std::size_t>(a2));
    Functional diff = al1 - al2;
    OmegaMatrix w(F, 2, m);
    w(0, 0) = d * (al1 - xy * al2);
    w(0, 1) = (-x * d) * diff;
    w(1, 0) = (y * d) * diff;
    w(1, 1) = d * (al2 - xy * al1);
    return w;
}

std::vector<OmegaMatrix> omegas_from_grid(const EGrid& g)
{
    if (g.n() != 2)
        throw DimensionMismatch("omega^p needs a grid on two vertices");
    if (!g.algebra().is_diagonal())
        throw InvalidInput("omega^p needs A = K^m");
    const std::size_t m = g.m();
    std::vector<OmegaMatrix> out;
    for (std::size_t p = 0; p < m; ++p) {
        OmegaMatrix w(g.field(), 2, m);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                w(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = g(i, j).row(p);
        out.push_back(std::move(w));
    }
    return out;
}

CycleDatum extract_cycle_datum(const std::vector<OmegaMatrix>& ws)
{
    const std::size_t m = ws.size();
    if (m == 0)
        throw InvalidInput("no omega matrices");
    const Field F = ws.front().field();
    CycleDatum d{IndexMap(m), std::vector<Scalar>(m, F.zero())};
    for (std::size_t p = 0; p < m; ++p) {
        const OmegaMatrix& w = ws[p];
        const int P = static_cast<int>(p);
        if (w.n() != 2 || w.m() != m)
            throw DimensionMismatch("omega^" + idx(p) + " must be 2 x 2 over K^" + std::to_string(m));
        if (!(w.field() == F))
            throw FieldMismatch("omega matrices over different fields");
        if (!check_module_axioms(w))
            throw InvalidInput("omega^" + idx(p) + " is not a module structure");
        const Functional fp = Vector::basis(F, m, p);
        if (w(0, 0) + w(1, 0) != fp || w(0, 1) + w(1, 1) != fp)
            throw NotSplitConsistent("columns of omega^" + idx(p) + " do not sum to f_" + idx(p) + "*", P);

        // Eigen-columns: omega(f_q) projects onto the f_q* eigenspace.
        std::vector<Vector> cols;
        IndexMap chars;
        for (std::size_t q = 0; q < m; ++q)
            for (auto& v : image_basis(w.at_basis(q))) {
                cols.push_back(std::move(v));
                chars.push_back(static_cast<int>(q));
            }
        Matrix X = Matrix::from_columns(F, 2, cols);
        FiberPartition fibers(chars);
        Canonical2 c = normalize2(X, fibers);
        int a1 = chars[0], a2 = chars[1];
        if (c.form == CanonicalForm::X2)
            std::swap(a1, a2);
        const Scalar one = F.one();
        if (a1 == a2) {
            d.u[p] = P;
        } else if (c.y == -one && a2 == P) {
            d.u[p] = a1;
            d.a[p] = c.x * (one + c.x).inverse();
        } else if (c.x == -one && a1 == P) {
            d.u[p] = a2;
            d.a[p] = (one + c.y).inverse();
        } else {
            throw NotSplitConsistent("omega^" + idx(p) + " fits neither case", P);
        }
    }
    d = normalize_cycle_datum(d);
    auto maps = cycle_maps(d);
    for (std::size_t p = 0; p < m; ++p) {
        const OmegaMatrix& w = ws[p];
        if (maps.phi1.row(p) != w(0, 0) || maps.alpha1.row(p) != w(0, 1) || maps.alpha2.row(p) != w(1, 0) ||
            maps.phi2.row(p) != w(1, 1))
            throw NotSplitConsistent("omega^" + idx(p) + " is not reproduced by the extracted data",
                                     static_cast<int>(p));
    }
    return d;
}

} // namespace twistlab
