#include <doctest.h>

#include "support.hpp"
#include "twistlab/classify.hpp"

using namespace twistlab;

namespace {

const Field F2 = Field::prime(2);
const Field Q = Field::rationals();

CycleDatum swap_datum(const Field& f, const Scalar& a)
{
    return CycleDatum{{1, 0}, {a, f.one() - a}};
}

AdmissibleShape path12() { return validate_admissible_shape(Quiver(2, {{0, 0}, {1, 1}, {0, 1}})); }

} // namespace

TEST_CASE("flip grid passes every axiom")
{
    for (int n = 1; n <= 3; ++n) {
        EGrid g = EGrid::flip(n, Q, 2);
        CHECK(check_axioms(g).ok());
        CHECK(check_tau_axioms(g).ok());
    }
}

TEST_CASE("column-sum violation is reported with its column")
{
    EGrid g(2, Q, 2);
    Matrix id = Matrix::identity(Q, 2);
    g(0, 0) = id;
    g(1, 1) = id;
    g(0, 1) = id;
    AxiomReport r = check_axioms(g);
    CHECK_FALSE(r.ok());
    bool seen = false;
    for (const auto& a : r.axioms)
        if (a.name == "column_sum") {
            CHECK_FALSE(a.ok);
            CHECK(a.witness == std::vector<int>{1});
            seen = true;
        }
    CHECK(seen);
    CHECK_FALSE(check_tau_axioms(g).ok());
}

TEST_CASE("pointwise and tensor-level checks agree with the associativity oracle")
{
    Field f = Field::prime(2);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> bit(0, 1);
    auto grids = classify_two_vertices(2, f);
    for (int trial = 0; trial < 400; ++trial) {
        EGrid g = grids[static_cast<std::size_t>(trial) % grids.size()];
        if (trial % 2) {
            int i = bit(rng), j = bit(rng);
            std::size_t r = static_cast<std::size_t>(bit(rng)), c = static_cast<std::size_t>(bit(rng));
            g(i, j)(r, c) = g(i, j)(r, c) + f.one();
        }
        bool expected = oracle::twisted_product_is_unital_associative(g);
        CHECK(check_axioms(g).ok() == expected);
        CHECK(check_tau_axioms(g).ok() == expected);
    }
}

TEST_CASE("generated 2-cycle grids: orthogonality within a column")
{
    EGrid g = grid_from_pair(rep_from_cycle_datum(swap_datum(Q, Scalar(mpq_class(1, 3)))));
    CHECK(compose(g(0, 1), g(1, 1)).is_zero());
    CHECK(compose(g(1, 0), g(0, 0)).is_zero());
    CHECK(compose(g(0, 1), g(0, 1)) == g(0, 1));
}

TEST_CASE("pair_from_grid")
{
    AdmissiblePair p = pair_from_grid(EGrid::flip(3, Q, 2));
    CHECK(p.quiver().arrows().size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(p.loop_map(i).is_identity());

    AdmissiblePair c = pair_from_grid(grid_from_pair(rep_from_cycle_datum(swap_datum(Q, Scalar(mpq_class(2, 5))))));
    CHECK(c.quiver() == Quiver(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));

    RankOneDatum d{path12(), {{0, 1}, {0, 0}}};
    AdmissiblePair r = pair_from_grid(grid_from_pair(rep_from_rank1_datum(d, Q)));
    CHECK(r.quiver() == Quiver(2, {{0, 0}, {0, 1}, {1, 1}}));
    CHECK(r.is_admissible());

    EGrid bad(2, Q, 2);
    CHECK_THROWS_AS(pair_from_grid(bad), AxiomViolation);
}

TEST_CASE("grid_from_pair round trip")
{
    AdmissiblePair flip = pair_from_grid(EGrid::flip(2, F2, 2));
    CHECK(grid_from_pair(flip) == EGrid::flip(2, F2, 2));
    for (const auto& g : classify_two_vertices(3, F2)) {
        AdmissiblePair p = pair_from_grid(g);
        CHECK(grid_from_pair(p) == g);
        CHECK(pair_from_grid(grid_from_pair(p)) == p);
    }
}

TEST_CASE("2-cycle grid entries follow the character formula")
{
    Field f = Field::prime(5);
    CycleDatum d{{1, 0, 2}, {f.from_int(3), f.from_int(3), f.zero()}};
    d = normalize_cycle_datum(d);
    REQUIRE_FALSE(cycle_condition_violation(d).has_value());
    EGrid g = grid_from_pair(rep_from_cycle_datum(d));
    for (std::size_t p = 0; p < 3; ++p) {
        // Row p of E_11 is the character a_p f_p^* + (1 - a_p) f_{u(p)}^*.
        Vector expected(f, 3);
        expected[p] += d.a[p];
        expected[static_cast<std::size_t>(d.u[p])] += f.one() - d.a[p];
        CHECK(g(0, 0).row(p) == expected);
    }
}

TEST_CASE("representation predicates")
{
    QuiverRep all_id{Quiver(2, {{0, 0}, {1, 1}}), Algebra::diagonal(Q, 2),
                     {Matrix::identity(Q, 2), Matrix::identity(Q, 2)}};
    CHECK(check_splitted(all_id));
    CHECK(check_unital(all_id));
    CHECK(check_factorizable(all_id));

    QuiverRep proj = all_id;
    proj.phi[0] = Matrix::from_ints(Q, 2, 2, {1, 1, 0, 0});
    REQUIRE(is_idempotent(proj.phi[0]));
    PredicateResult fr = check_factorizable(proj);
    CHECK_FALSE(fr.ok);
    CHECK(fr.witness.find("(1,1)") != std::string::npos);

    QuiverRep rank2{Quiver(2, {{0, 0}, {1, 0}, {1, 1}}), Algebra::diagonal(Q, 2),
                    {Matrix::identity(Q, 2), Matrix::identity(Q, 2), Matrix::identity(Q, 2)}};
    PredicateResult sr = check_splitted(rank2);
    CHECK_FALSE(sr.ok);
    CHECK_FALSE(sr.witness.empty());
}

TEST_CASE("twisted algebra")
{
    Algebra a = build_twisted_algebra(EGrid::flip(2, Q, 2));
    CHECK(a.dim() == 4);
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y)
            CHECK(a.product(x, y) == (x == y ? Vector::basis(Q, 4, x) : Vector::zeros(Q, 4)));

    auto m1 = classify_two_vertices(1, Field::prime(3));
    REQUIRE(m1.size() == 1);
    CHECK(m1[0] == EGrid::flip(2, Field::prime(3), 1));

    CycleDatum d{{1, 0}, {Q.one(), Q.zero()}};
    EGrid g = grid_from_pair(rep_from_cycle_datum(d));
    Algebra t = build_twisted_algebra(g);
    CHECK(t.dim() == 4);
    CHECK_FALSE(find_associativity_violation(t).has_value());
    CHECK(find_associativity_violation_parallel(t, 2) == find_associativity_violation(t));
    CHECK_FALSE(find_unit_violation(t).has_value());
}

TEST_CASE("twisted product of a bad grid is caught")
{
    EGrid g = EGrid::flip(2, Q, 2);
    g(0, 1) = Matrix::from_ints(Q, 2, 2, {1, 0, 0, 0});
    g(1, 1) = Matrix::from_ints(Q, 2, 2, {0, 0, 0, 1});
    CHECK_FALSE(check_axioms(g).ok());
    CHECK_THROWS_AS(build_twisted_algebra(g), MathError);
}

TEST_CASE("identity-loop characterization")
{
    CHECK(check_identity_loop_characterization(pair_from_grid(EGrid::flip(3, Q, 2))));
    for (const auto& d : enumerate_rank1_data(path12(), 3))
        if (!rrank1_violation(d.shape, d.u, {}))
            CHECK(check_identity_loop_characterization(rep_from_rank1_datum(d, Q)));
    CycleDatum c = swap_datum(Q, Scalar(mpq_class(3, 7)));
    AdmissiblePair p = rep_from_cycle_datum(c);
    CHECK_FALSE(p.loop_map(0).is_identity());
    CHECK(check_identity_loop_characterization(p));
}
