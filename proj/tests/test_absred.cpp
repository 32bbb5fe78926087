#include <doctest.h>

#include "support.hpp"
#include "twistlab/absred.hpp"

using namespace twistlab;

namespace {

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng)
{
    while (true) {
        Matrix x(f, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                x(r, c) = random_scalar(f, rng);
        if (!determinant(x).is_zero())
            return x;
    }
}

OmegaMatrix diagonal_omega(const Field& f, const IndexMap& u, std::size_t m)
{
    OmegaMatrix w(f, u.size(), m);
    for (std::size_t i = 0; i < u.size(); ++i)
        w(i, i) = Vector::basis(f, m, static_cast<std::size_t>(u[i]));
    return w;
}

} // namespace

TEST_CASE("module axioms")
{
    Field f = Field::prime(5);
    CHECK(check_module_axioms(diagonal_omega(f, {0, 2, 2}, 3)));
    OmegaMatrix w = diagonal_omega(f, {0, 1}, 2);
    w(0, 0) = Vector::zeros(f, 2);
    CHECK_FALSE(check_module_axioms(w));

    for (const auto& d : enumerate_cycle_data(3, Field::prime(3)))
        for (const auto& o : omegas_from_grid(grid_from_pair(rep_from_cycle_datum(d))))
            CHECK(check_module_axioms(o));
}

TEST_CASE("omega from a diagonalizing matrix")
{
    Field f = Field::prime(7);
    CHECK(omega_from_diag(Matrix::identity(f, 3), {0, 2, 1}, 3) == diagonal_omega(f, {0, 2, 1}, 3));

    Scalar x = f.from_int(2), y = f.from_int(5);
    Matrix X = Matrix::from_ints(f, 2, 2, {1, 2, 5, 1});
    OmegaMatrix w = omega_from_diag(X, {0, 1}, 2);
    Scalar k = (f.one() - x * y).inverse();
    Vector a1 = Vector::basis(f, 2, 0), a2 = Vector::basis(f, 2, 1);
    CHECK(w(0, 0) == k * (a1 - (x * y) * a2));

    std::mt19937_64 rng(2);
    FiberPartition fp({0, 1, 1});
    for (int t = 0; t < 20; ++t) {
        Matrix A = random_invertible(f, 3, rng);
        Matrix Y = random_invertible(f, 3, rng);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                if (fp.fiber_of(static_cast<int>(r)) != fp.fiber_of(static_cast<int>(c)))
                    Y(r, c) = f.zero();
        if (determinant(Y).is_zero())
            continue;
        CHECK(is_in_Hu(Y, fp));
        CHECK(omega_from_diag(A, fp.u(), 2) == omega_from_diag(A * Y, fp.u(), 2));
        CHECK(same_orbit(A, A * Y, fp));
    }
    CHECK_THROWS_AS(omega_from_diag(Matrix::zero(f, 2), {0, 1}, 2), SingularMatrix);
}

TEST_CASE("fibers and blocks")
{
    Field f = Field::rationals();
    FiberPartition fp({2, 0, 2, 1});
    REQUIRE(fp.size() == 3);
    CHECK(fp.fiber(0) == std::vector<int>{1});
    CHECK(fp.fiber(2) == std::vector<int>{0, 2});
    CHECK(fp.fiber_of(2) == 2);

    Matrix X = Matrix::from_ints(f, 2, 2, {1, 2, 3, 4});
    CHECK(blocks(X, FiberPartition({0, 0})).block(0, 0) == X);
    BlockView single = blocks(X, FiberPartition({0, 1}));
    CHECK(single.block(0, 1) == Matrix::from_ints(f, 1, 1, {2}));
    CHECK(single.column_block(1) == Matrix::from_ints(f, 2, 1, {2, 4}));
}

TEST_CASE("H_u membership")
{
    Field f = Field::rationals();
    FiberPartition fp({0, 1, 2, 1});
    CHECK(is_in_Hu(Matrix::identity(f, 4), fp));
    Matrix Y = Matrix::from_ints(f, 4, 4, {3, 0, 0, 0, 0, 1, 0, 2, 0, 0, 5, 0, 0, 3, 0, 4});
    CHECK(is_in_Hu(Y, fp));
    Matrix mix = Matrix::identity(f, 4);
    mix(0, 1) = f.one();
    CHECK_FALSE(is_in_Hu(mix, fp));
    CHECK_FALSE(is_in_Hu(Matrix::zero(f, 4), fp));
}

TEST_CASE("H_u size over small fields")
{
    for (std::uint32_t p : {2u, 3u}) {
        Field f = Field::prime(p);
        for (const auto& u : all_functions(2, 2)) {
            FiberPartition fp(u);
            std::uint64_t expected = 1;
            for (const auto& fib : fp.fibers())
                expected *= oracle::gl_order(static_cast<int>(fib.size()), p);
            std::uint64_t count = 0;
            std::vector<std::uint32_t> e(4, 0);
            while (true) {
                Matrix Y(f, 2, 2);
                for (std::size_t k = 0; k < 4; ++k)
                    Y(k / 2, k % 2) = f.from_int(e[k]);
                count += is_in_Hu(Y, fp);
                std::size_t k = 0;
                while (k < 4 && ++e[k] == p)
                    e[k++] = 0;
                if (k == 4)
                    break;
            }
            CHECK(count == expected);
        }
    }
}

TEST_CASE("normalize")
{
    Field f = Field::prime(5);
    NormalizedMatrix id = normalize(Matrix::identity(f, 3), FiberPartition({0, 1, 1}));
    CHECK(id.matrix.is_identity());
    CHECK(normalize(Matrix::from_ints(f, 2, 2, {2, 3, 1, 1}), FiberPartition({0, 0})).matrix.is_identity());

    std::mt19937_64 rng(21);
    FiberPartition fp({0, 1, 1});
    for (int t = 0; t < 50; ++t) {
        Matrix X = random_invertible(f, 3, rng);
        NormalizedMatrix n = normalize(X, fp);
        CHECK(same_orbit(X, n.matrix, fp));
        CHECK(omega_from_diag(X, fp.u(), 2) == omega_from_diag(n.matrix, fp.u(), 2));
        CHECK(normalize(n.matrix, fp).matrix == n.matrix);
    }
    CHECK(same_orbit(Matrix::identity(f, 2), Matrix::identity(f, 2), FiberPartition({0, 1})));
    CHECK_FALSE(same_orbit(Matrix::identity(f, 2), Matrix::from_ints(f, 2, 2, {1, 1, 0, 1}), FiberPartition({0, 1})));
}

TEST_CASE("normalize2")
{
    Field f = Field::prime(7);
    FiberPartition two({0, 1});
    Canonical2 s = normalize2(Matrix::from_ints(f, 2, 2, {3, 1, 4, 2}), FiberPartition({0, 0}));
    CHECK(s.form == CanonicalForm::X1);
    CHECK(s.x.is_zero());
    CHECK(s.y.is_zero());

    Scalar x1 = f.from_int(3), y1 = f.from_int(4);
    Matrix X = Matrix::from_ints(f, 2, 2, {1, 1, 3, 4});
    Canonical2 c = normalize2(X, two);
    CHECK(c.form == CanonicalForm::X2);
    CHECK(c.x == x1.inverse());
    CHECK(c.y == y1);
    CHECK(same_orbit(X, c.matrix(), two));

    Matrix already = Matrix::from_ints(f, 2, 2, {1, 2, 3, 1});
    Canonical2 u = normalize2(already, two);
    CHECK(u.form == CanonicalForm::X1);
    CHECK(u.matrix() == already);
}

TEST_CASE("two-dimensional action")
{
    Field f = Field::prime(5);
    OmegaMatrix d = two_dim_action(f.zero(), f.zero(), 0, 1, 2);
    CHECK(d == diagonal_omega(f, {0, 1}, 2));
    OmegaMatrix same = two_dim_action(f.from_int(2), f.from_int(4), 1, 1, 2);
    CHECK(same == diagonal_omega(f, {1, 1}, 2));
    for (long x = 0; x < 5; ++x)
        for (long y = 0; y < 5; ++y) {
            if ((x * y) % 5 == 1) {
                CHECK_THROWS_AS(two_dim_action(f.from_int(x), f.from_int(y), 0, 1, 2), DegenerateParameters);
                continue;
            }
            Matrix X = Matrix::from_ints(f, 2, 2, {1, x, y, 1});
            CHECK(two_dim_action(f.from_int(x), f.from_int(y), 0, 1, 2) == omega_from_diag(X, {0, 1}, 2));
        }
}

TEST_CASE("cycle datum extraction")
{
    Field f = Field::prime(3);
    std::vector<OmegaMatrix> diag;
    for (std::size_t p = 0; p < 2; ++p)
        diag.push_back(two_dim_action(f.zero(), f.zero(), static_cast<int>(p), static_cast<int>(p), 2));
    CycleDatum d = extract_cycle_datum(diag);
    CHECK(d.u == IndexMap{0, 1});
    CHECK(d.a == std::vector<Scalar>{f.zero(), f.zero()});

    for (const auto& c : enumerate_cycle_data(2, f)) {
        auto w = omegas_from_grid(grid_from_pair(rep_from_cycle_datum(c)));
        CHECK(extract_cycle_datum(w) == c);
    }

    std::vector<OmegaMatrix> bad = diag;
    bad[0] = two_dim_action(f.zero(), f.zero(), 1, 1, 2);
    CHECK_THROWS_AS(extract_cycle_datum(bad), NotSplitConsistent);
    bad[0](0, 0) = Vector::zeros(f, 2);
    CHECK_THROWS_AS(extract_cycle_datum(bad), InvalidInput);
}
