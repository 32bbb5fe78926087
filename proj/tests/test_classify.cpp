#include <set>

#include <doctest.h>

#include "support.hpp"
#include "twistlab/classify.hpp"

using namespace twistlab;

namespace {

const Field Q = Field::rationals();

AdmissibleShape shape(int n, std::vector<Arrow> nonloops)
{
    for (int i = 0; i < n; ++i)
        nonloops.push_back({i, i});
    return validate_admissible_shape(Quiver(n, nonloops));
}

EGrid grid_of(const CycleDatum& d)
{
    CycleMaps c = cycle_maps(d);
    EGrid g(2, field_of(d), d.u.size());
    g(0, 0) = c.phi1;
    g(0, 1) = c.alpha1;
    g(1, 0) = c.alpha2;
    g(1, 1) = c.phi2;
    return g;
}

} // namespace

TEST_CASE("rank-one data generate the expected maps")
{
    AdmissiblePair flip = rep_from_rank1_datum(RankOneDatum{shape(3, {}), {{0, 1}, {0, 1}, {0, 1}}}, Q);
    CHECK(grid_from_pair(flip) == EGrid::flip(3, Q, 2));

    AdmissiblePair p = rep_from_rank1_datum(RankOneDatum{shape(2, {{0, 1}}), {{0, 1}, {0, 0}}}, Q);
    Matrix phi2 = p.loop_map(1);
    CHECK(phi2.column(0) == Vector::ones(Q, 2));
    CHECK(phi2.column(1).is_zero());
    CHECK(p.rep().arrow_map(0, 1) == Matrix::identity(Q, 2) - phi2);
    CHECK(p.is_admissible());
    CHECK_FALSE(ideal_product_violation(p).has_value());

    auto v = rrank1_violation(shape(2, {{0, 1}}), {{0, 0}, {0, 0}}, {});
    REQUIRE(v.has_value());
    CHECK_THROWS_AS(rep_from_rank1_datum(RankOneDatum{shape(2, {{0, 1}}), {{0, 0}, {0, 0}}}, Q), ConditionViolated);
}

TEST_CASE("rank-one enumeration counts")
{
    CHECK(enumerate_rank1_data(shape(1, {}), 3).size() == 10);
    CHECK(enumerate_rank1_data(shape(1, {}), 1).size() == 1);

    // Pairs of idempotents on {1,2} where every point is fixed by one of them.
    std::size_t expected = 0;
    auto id = idempotent_functions(2);
    for (const auto& u1 : id)
        for (const auto& u2 : id) {
            bool ok = true;
            for (int p = 0; p < 2; ++p)
                ok = ok && (u1[static_cast<std::size_t>(p)] == p || u2[static_cast<std::size_t>(p)] == p);
            expected += ok;
        }
    CHECK(enumerate_rank1_data(shape(2, {{0, 1}}), 2).size() == expected);
    for (const auto& d : enumerate_rank1_data(shape(3, {{0, 1}, {1, 2}}), 2)) {
        if (rrank1_violation(d.shape, d.u, {}))
            continue;
        CHECK(check_axioms(grid_from_pair(rep_from_rank1_datum(d, Field::prime(3)))).ok());
    }
}

TEST_CASE("a vertex receiving only its loop carries the identity")
{
    // Column sum at such a vertex reduces to phi = Id.
    std::size_t valid = 0;
    for (const auto& d : enumerate_rank1_data(shape(2, {{0, 1}}), 3)) {
        bool root_id = d.u[0] == IndexMap{0, 1, 2};
        CHECK(rrank1_violation(d.shape, d.u, {}).has_value() == !root_id);
        if (!root_id) {
            CHECK_THROWS_AS(rep_from_rank1_datum(d, Q), ConditionViolated);
            continue;
        }
        ++valid;
        CHECK(check_axioms(grid_from_pair(rep_from_rank1_datum(d, Q))).ok());
    }
    CHECK(valid == oracle::idempotent_maps(3));
    EGrid g(1, Q, 2);
    g(0, 0) = endo_from_function(Q, {0, 0});
    CHECK_FALSE(check_axioms(g).ok());
}

TEST_CASE("kernel products vanish for rank-one data")
{
    for (const auto& d : enumerate_rank1_data(shape(3, {{0, 1}, {0, 2}}), 3)) {
        if (rrank1_violation(d.shape, d.u, {}))
            continue;
        AdmissiblePair p = rep_from_rank1_datum(d, Q);
        for (const auto& a : p.quiver().arrows()) {
            if (a.is_loop())
                continue;
            auto ks = kernel_basis(p.loop_map(a.s));
            auto kt = kernel_basis(p.loop_map(a.t));
            CHECK(subspace_product_is_zero(ks, kt));
        }
    }
}

TEST_CASE("2-cycle data")
{
    CycleDatum one{{0}, {Q.zero()}};
    AdmissiblePair p1 = rep_from_cycle_datum(one);
    CHECK(p1.quiver().arrows().size() == 2);
    CHECK(p1.loop_map(0).is_identity());

    for (long k : {-3L, 0L, 1L, 2L}) {
        Scalar a = Q.from_int(k) / Q.from_int(5);
        CycleDatum d{{1, 0}, {a, Q.one() - a}};
        CHECK_FALSE(cycle_condition_violation(d).has_value());
        CHECK(check_axioms(grid_from_pair(rep_from_cycle_datum(d))).ok());
    }

    // A 3-cycle admits no assignment of {0,1} values.
    Field f = Field::prime(3);
    int accepted = 0;
    for (int mask = 0; mask < 8; ++mask) {
        CycleDatum d{{1, 2, 0}, {}};
        for (int p = 0; p < 3; ++p)
            d.a.push_back(f.from_int(mask >> p & 1));
        accepted += !cycle_condition_violation(d).has_value();
    }
    CHECK(accepted == 0);
}

TEST_CASE("cycle enumeration matches the associativity oracle")
{
    CHECK(enumerate_cycle_data(1, Field::prime(2)).size() == 1);
    for (auto [m, p] : {std::pair{2, 2u}, std::pair{2, 3u}, std::pair{3, 2u}, std::pair{3, 3u}}) {
        Field f = Field::prime(p);
        std::set<EGrid> valid;
        for (const auto& u : all_functions(m, m)) {
            std::vector<long> a(static_cast<std::size_t>(m), 0);
            while (true) {
                CycleDatum d{u, {}};
                for (long x : a)
                    d.a.push_back(f.from_int(x));
                EGrid g = grid_of(d);
                if (oracle::twisted_product_is_unital_associative(g))
                    valid.insert(g);
                std::size_t k = 0;
                while (k < a.size() && ++a[k] == static_cast<long>(p))
                    a[k++] = 0;
                if (k == a.size())
                    break;
            }
        }
        auto data = enumerate_cycle_data(m, f);
        CHECK(data.size() == valid.size());
        for (const auto& d : data)
            CHECK(valid.count(grid_of(d)) == 1);
    }
}

TEST_CASE("rational cycle families for m = 2")
{
    auto fams = cycle_families(2, Q);
    CHECK(fams.size() == 6);
    bool id_seen = false, swap_seen = false;
    for (const auto& fam : fams) {
        if (fam.u == IndexMap{0, 1}) {
            id_seen = true;
            CHECK(fam.free.empty());
            CHECK(fam.base == std::vector<Scalar>{Q.zero(), Q.zero()});
        }
        if (fam.u == IndexMap{1, 0}) {
            swap_seen = true;
            REQUIRE(fam.free.size() == 1);
            Scalar t = Q.from_int(7) / Q.from_int(3);
            CycleDatum d = instantiate(fam, {t});
            CHECK(d.a[0] + d.a[1] == Q.one());
            CHECK_FALSE(cycle_condition_violation(d).has_value());
        }
    }
    CHECK(id_seen);
    CHECK(swap_seen);
    std::mt19937_64 rng(3);
    for (const auto& d : cycle_data(3, Q, Sampling{4, &rng}))
        CHECK(check_axioms(grid_from_pair(rep_from_cycle_datum(d))).ok());
}

TEST_CASE("connected cycles with pendant trees")
{
    Field f = Field::prime(3);
    std::vector<Scalar> a{f.one(), f.zero()};
    ConnectedCycleDatum bad{shape(3, {{0, 1}, {1, 0}, {0, 2}}), {{1, 0}, {1, 0}, {0, 0}}, a};
    CHECK_THROWS_AS(rep_from_connected_cycle(bad), ConditionViolated);
    ConnectedCycleDatum good{shape(3, {{0, 1}, {1, 0}, {1, 2}}), {{1, 0}, {1, 0}, {0, 0}}, a};
    AdmissiblePair p = rep_from_connected_cycle(good);
    CHECK(check_axioms(grid_from_pair(p)).ok());

    ConnectedCycleDatum bare{shape(2, {{0, 1}, {1, 0}}), {{1, 0}, {1, 0}}, a};
    CHECK(grid_from_pair(rep_from_connected_cycle(bare)) == grid_from_pair(rep_from_cycle_datum(CycleDatum{{1, 0}, a})));
}

TEST_CASE("ideal decomposition")
{
    AdmissiblePair flip = pair_from_grid(EGrid::flip(1, Q, 2));
    IdealDecomposition d0 = ideal_decomposition(flip, 0);
    CHECK(d0.image.size() == 2);
    CHECK(d0.kernel.empty());

    AdmissiblePair p = rep_from_rank1_datum(RankOneDatum{shape(2, {{0, 1}}), {{0, 1}, {0, 0}}}, Q);
    IdealDecomposition d1 = ideal_decomposition(p, 1);
    REQUIRE(d1.image.size() == 1);
    REQUIRE(d1.kernel.size() == 1);
    CHECK(in_span(d1.image, Vector::ones(Q, 2)));
    CHECK(in_span(d1.kernel, Vector::basis(Q, 2, 1)));
    CHECK(d1.direct_sum);
    CHECK(d1.kernel_is_ideal);
    CHECK(d1.image_is_subalgebra);
}

TEST_CASE("classification produces valid distinct grids")
{
    Field f = Field::prime(2);
    auto all = classify_all(3, 2, f);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& g : all) {
        CHECK(check_axioms(g).ok());
        CHECK(oracle::twisted_product_is_unital_associative(g));
    }
}
