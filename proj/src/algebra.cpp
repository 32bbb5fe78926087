#include "twistlab/algebra.hpp"

#include <omp.h>

namespace twistlab {

Algebra::Algebra(Field f, std::size_t dim, std::vector<Vector> table, Vector unit)
    : field_(f), dim_(dim), table_(std::move(table)), unit_(std::move(unit))
{
    if (table_.size() != dim * dim)
        throw DimensionMismatch("structure table must have dim^2 entries");
    for (const auto& v : table_)
        if (v.size() != dim)
            throw DimensionMismatch("structure constant vector has wrong length");
    if (unit_.size() != dim)
        throw DimensionMismatch("unit has wrong length");
}

Algebra Algebra::diagonal(Field f, std::size_t m)
{
    std::vector<Vector> table;
    table.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            table.push_back(i == j ? Vector::basis(f, m, i) : Vector::zeros(f, m));
    Algebra a(f, m, std::move(table), Vector::ones(f, m));
    a.diagonal_ = true;
    return a;
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const
{
    if (a.size() != dim_ || b.size() != dim_)
        throw DimensionMismatch("algebra product: length mismatch");
    if (diagonal_)
        return hadamard(a, b);
    Vector out(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b[j].is_zero())
                continue;
            Scalar c = a[i] * b[j];
            const Vector& p = product(i, j);
            for (std::size_t k = 0; k < dim_; ++k)
                if (!p[k].is_zero())
                    out[k] += c * p[k];
        }
    }
    return out;
}

namespace {

std::optional<Triple> scan_first_index(const Algebra& a, std::size_t i)
{
    const auto d = a.dim();
    for (std::size_t j = 0; j < d; ++j) {
        const Vector& ij = a.product(i, j);
        for (std::size_t k = 0; k < d; ++k) {
            Vector lhs = a.multiply(ij, Vector::basis(a.field(), d, k));
            Vector rhs = a.multiply(Vector::basis(a.field(), d, i), a.product(j, k));
            if (!(lhs == rhs))
                return Triple{i, j, k};
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Triple> find_associativity_violation(const Algebra& a)
{
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (auto t = scan_first_index(a, i))
            return t;
    return std::nullopt;
}

std::optional<Triple> find_associativity_violation_parallel(const Algebra& a, int threads)
{
    const auto d = static_cast<long>(a.dim());
    std::vector<std::optional<Triple>> found(a.dim());
    if (threads <= 0)
        threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < d; ++i)
        found[static_cast<std::size_t>(i)] = scan_first_index(a, static_cast<std::size_t>(i));
    for (auto& f : found)
        if (f)
            return f;
    return std::nullopt;
}

std::optional<std::size_t> find_unit_violation(const Algebra& a)
{
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vector bi = Vector::basis(a.field(), a.dim(), i);
        if (!(a.multiply(a.unit(), bi) == bi) || !(a.multiply(bi, a.unit()) == bi))
            return i;
    }
    return std::nullopt;
}

bool is_algebra_map(const Algebra& a, const Matrix& f)
{
    if (f.rows() != a.dim() || f.cols() != a.dim())
        return false;
    if (!(f * a.unit() == a.unit()))
        return false;
    std::vector<Vector> img;
    for (std::size_t i = 0; i < a.dim(); ++i)
        img.push_back(f.column(i));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!(f * a.product(i, j) == a.multiply(img[i], img[j])))
                return false;
    return true;
}

bool subspace_product_is_zero(const Algebra& a, std::span<const Vector> U, std::span<const Vector> V)
{
    for (const auto& x : U)
        for (const auto& y : V)
            if (!a.multiply(x, y).is_zero())
                return false;
    return true;
}

} // namespace twistlab
