#include "twistlab/linalg.hpp"

#include <string>

namespace twistlab {

namespace {

void require(bool cond, const char* what)
{
    if (!cond)
        throw DimensionMismatch(what);
}

} // namespace

Vector::Vector(Field f, std::vector<Scalar> coords) : field_(f), c_(std::move(coords))
{
    for (const auto& s : c_)
        if (!(s.field() == f))
            throw FieldMismatch("vector coordinate outside " + f.to_string());
}

Vector Vector::ones(Field f, std::size_t n)
{
    Vector v(f, n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = f.one();
    return v;
}

Vector Vector::basis(Field f, std::size_t n, std::size_t k)
{
    Vector v(f, n);
    v[k] = f.one();
    return v;
}

bool Vector::is_zero() const
{
    for (const auto& s : c_)
        if (!s.is_zero())
            return false;
    return true;
}

Vector& Vector::operator+=(const Vector& o)
{
    require(size() == o.size(), "vector sum: length mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o)
{
    require(size() == o.size(), "vector difference: length mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

Vector& Vector::operator*=(const Scalar& s)
{
    for (auto& x : c_)
        x *= s;
    return *this;
}

Scalar evaluate(const Functional& phi, const Vector& v)
{
    require(phi.size() == v.size(), "functional evaluation: length mismatch");
    Scalar acc = v.field().zero();
    for (std::size_t i = 0; i < v.size(); ++i)
        acc += phi[i] * v[i];
    return acc;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(f), rows_(rows), cols_(cols), a_(std::move(entries))
{
    require(a_.size() == rows * cols, "matrix: entry count mismatch");
}

Matrix Matrix::identity(Field f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = f.one();
    return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, std::span<const Vector> cols)
{
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        m.set_column(c, cols[c]);
    return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, std::span<const Vector> rows)
{
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, "from_rows: row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_ints(Field f, std::size_t rows, std::size_t cols,
                         std::initializer_list<long> entries)
{
    require(entries.size() == rows * cols, "from_ints: entry count mismatch");
    std::vector<Scalar> a;
    a.reserve(entries.size());
    for (long e : entries)
        a.push_back(f.from_int(e));
    return Matrix(f, rows, cols, std::move(a));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::row(std::size_t r) const
{
    Vector v(field_, cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        v[c] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v)
{
    require(v.size() == rows_, "set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const
{
    for (const auto& s : a_)
        if (!s.is_zero())
            return false;
    return true;
}

bool Matrix::is_identity() const
{
    if (!is_square())
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r == c ? !(*this)(r, c).is_one() : !(*this)(r, c).is_zero())
                return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        a_[i] -= o.a_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s)
{
    for (auto& x : a_)
        x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    require(a.cols_ == b.rows_, "matrix product: inner dimension mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    require(a.cols_ == v.size(), "matrix-vector product: length mismatch");
    Vector out(a.field_, a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            out[i] += a(i, k) * v[k];
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b)
{
    if (auto c = a.rows_ <=> b.rows_; c != 0)
        return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0)
        return c;
    return a.a_ <=> b.a_;
}

Vector hadamard(const Vector& u, const Vector& v)
{
    require(u.size() == v.size(), "hadamard: length mismatch");
    Vector out(u.field(), u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out[i] = u[i] * v[i];
    return out;
}

EndoMap compose(const EndoMap& f, const EndoMap& g)
{
    require(f.is_square() && g.is_square() && f.rows() == g.rows(), "compose: dimension mismatch");
    return f * g;
}

bool is_idempotent(const EndoMap& f)
{
    return f.is_square() && f * f == f;
}

bool is_algebra_map(const EndoMap& f)
{
    if (!f.is_square())
        return false;
    const auto m = f.rows();
    const auto& F = f.field();
    if (!(f * Vector::ones(F, m) == Vector::ones(F, m)))
        return false;
    std::vector<Vector> img;
    img.reserve(m);
    for (std::size_t p = 0; p < m; ++p)
        img.push_back(f.column(p));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            // f_p f_q = delta_pq f_p
            Vector lhs = p == q ? img[p] : Vector::zeros(F, m);
            if (!(lhs == hadamard(img[p], img[q])))
                return false;
        }
    return true;
}

EndoMap endo_from_function(const Field& field, const IndexMap& u)
{
    const auto m = u.size();
    EndoMap theta(field, m, m);
    for (std::size_t q = 0; q < m; ++q) {
        if (u[q] < 0 || static_cast<std::size_t>(u[q]) >= m)
            throw InvalidInput("endo_from_function: value out of range");
        theta(q, static_cast<std::size_t>(u[q])) = field.one();
    }
    return theta;
}

RowEchelon row_reduce(Matrix m)
{
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != r)
            for (std::size_t k = 0; k < m.cols(); ++k)
                std::swap(m(piv, k), m(r, k));
        Scalar inv = m(r, c).inverse();
        for (std::size_t k = c; k < m.cols(); ++k)
            m(r, k) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            Scalar factor = m(i, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                m(i, k) -= factor * m(r, k);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m)
{
    return row_reduce(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& f)
{
    auto ech = row_reduce(f);
    const auto& R = ech.reduced;
    std::vector<bool> is_pivot(f.cols(), false);
    for (auto c : ech.pivots)
        is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < f.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(f.field(), f.cols());
        v[free] = f.field().one();
        for (std::size_t i = 0; i < ech.pivots.size(); ++i)
            v[ech.pivots[i]] = -R(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> image_basis(const Matrix& f)
{
    auto ech = row_reduce(f);
    std::vector<Vector> basis;
    for (auto c : ech.pivots)
        basis.push_back(f.column(c));
    return basis;
}

std::optional<Matrix> try_inverse(const Matrix& m)
{
    require(m.is_square(), "inverse: matrix not square");
    const auto n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = m.field().one();
    }
    auto ech = row_reduce(std::move(aug));
    if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1))
        return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = ech.reduced(r, n + c);
    return inv;
}

Matrix inverse(const Matrix& m)
{
    if (auto inv = try_inverse(m))
        return *std::move(inv);
    throw SingularMatrix();
}

Scalar determinant(const Matrix& m0)
{
    require(m0.is_square(), "determinant: matrix not square");
    Matrix m = m0;
    const auto n = m.rows();
    Scalar det = m.field().one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).is_zero())
            ++piv;
        if (piv == n)
            return m.field().zero();
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(m(piv, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero())
                continue;
            Scalar factor = m(i, c) * inv;
            for (std::size_t k = c; k < n; ++k)
                m(i, k) -= factor * m(c, k);
        }
    }
    return det;
}

bool in_span(std::span<const Vector> basis, const Vector& v)
{
    if (basis.empty())
        return v.is_zero();
    Matrix a = Matrix::from_columns(v.field(), v.size(), basis);
    std::vector<Vector> cols(basis.begin(), basis.end());
    cols.push_back(v);
    Matrix b = Matrix::from_columns(v.field(), v.size(), cols);
    return rank(a) == rank(b);
}

bool subspace_product_is_zero(std::span<const Vector> U, std::span<const Vector> V)
{
    for (const auto& u : U)
        for (const auto& v : V)
            if (!hadamard(u, v).is_zero())
                return false;
    return true;
}

bool is_idempotent_function(const IndexMap& u)
{
    for (int x : u)
        if (u[static_cast<std::size_t>(x)] != x)
            return false;
    return true;
}

std::vector<IndexMap> all_functions(int m, int r)
{
    std::vector<IndexMap> out;
    if (m < 0 || r <= 0)
        return out;
    IndexMap u(static_cast<std::size_t>(m), 0);
    while (true) {
        out.push_back(u);
        int k = m - 1;
        while (k >= 0 && u[static_cast<std::size_t>(k)] == r - 1)
            u[static_cast<std::size_t>(k--)] = 0;
        if (k < 0)
            break;
        ++u[static_cast<std::size_t>(k)];
    }
    return out;
}

std::vector<IndexMap> idempotent_functions(int m)
{
    std::vector<IndexMap> out;
    for (auto& u : all_functions(m, m))
        if (is_idempotent_function(u))
            out.push_back(std::move(u));
    return out;
}

} // namespace twistlab
