#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "twistlab/scalar.hpp"

namespace twistlab {

/// Coordinates in the canonical basis f_1..f_m of K^m. Also used for
/// functionals (coefficients in the dual basis f_1^*..f_m^*).
class Vector {
public:
    Vector() = default;
    Vector(Field f, std::size_t n) : field_(f), c_(n, f.zero()) {}
    Vector(Field f, std::vector<Scalar> coords);

    static Vector zeros(Field f, std::size_t n) { return Vector(f, n); }
    static Vector ones(Field f, std::size_t n);
    static Vector basis(Field f, std::size_t n, std::size_t k);

    const Field& field() const { return field_; }
    std::size_t size() const { return c_.size(); }
    Scalar& operator[](std::size_t i) { return c_[i]; }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    bool is_zero() const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Scalar& s);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }

    friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }
    friend auto operator<=>(const Vector& a, const Vector& b) { return a.c_ <=> b.c_; }

private:
    Field field_;
    std::vector<Scalar> c_;
};

using Functional = Vector;

/// Pairing of a functional with a vector.
Scalar evaluate(const Functional& phi, const Vector& v);

/// Dense matrix. For endomorphisms column q holds the image of f_q, so
/// matrix product is composition.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}
    Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix zero(Field f, std::size_t n) { return Matrix(f, n, n); }
    static Matrix identity(Field f, std::size_t n);
    static Matrix from_columns(Field f, std::size_t rows, std::span<const Vector> cols);
    static Matrix from_rows(Field f, std::size_t cols, std::span<const Vector> rows);
    /// Build from small integers, row-major.
    static Matrix from_ints(Field f, std::size_t rows, std::size_t cols,
                            std::initializer_list<long> entries);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;
    void set_column(std::size_t c, const Vector& v);

    bool is_zero() const;
    bool is_identity() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);

    Matrix transpose() const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    // Lexicographic over row-major entries (after dimensions).
    friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

using EndoMap = Matrix;

/// Set map {0..m-1} -> {0..r-1}, 0-based internally.
using IndexMap = std::vector<int>;

// --- algebra of K^m ------------------------------------------------------

/// Componentwise product, the multiplication of K^m.
Vector hadamard(const Vector& u, const Vector& v);

/// f o g, i.e. (f o g)(v) = f(g(v)).
EndoMap compose(const EndoMap& f, const EndoMap& g);

bool is_idempotent(const EndoMap& f);

/// True iff f(1) = 1 and f(f_p f_q) = f(f_p) f(f_q) for all basis pairs.
bool is_algebra_map(const EndoMap& f);

/// The algebra endomorphism theta of K^m with theta(f_p) = sum_{q: u(q)=p} f_q.
EndoMap endo_from_function(const Field& field, const IndexMap& u);

// --- exact elimination ---------------------------------------------------

struct RowEchelon {
    Matrix reduced;                 // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per nonzero row
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
std::vector<Vector> kernel_basis(const Matrix& f);
/// Basis of the column space, chosen among the original columns.
std::vector<Vector> image_basis(const Matrix& f);
Matrix inverse(const Matrix& m); // throws SingularMatrix
std::optional<Matrix> try_inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

/// True iff v lies in span(basis).
bool in_span(std::span<const Vector> basis, const Vector& v);

/// True iff u*v = 0 for every u in U, v in V (componentwise product).
bool subspace_product_is_zero(std::span<const Vector> U, std::span<const Vector> V);

// --- set maps ------------------------------------------------------------

bool is_idempotent_function(const IndexMap& u);

/// Every map {0..m-1} -> {0..r-1} in lexicographic order.
std::vector<IndexMap> all_functions(int m, int r);
std::vector<IndexMap> idempotent_functions(int m);

} // namespace twistlab
