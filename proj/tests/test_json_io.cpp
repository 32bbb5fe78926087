#include <doctest.h>

#include "twistlab/json_io.hpp"

using namespace twistlab;
using namespace twistlab::io;

TEST_CASE("scalars and matrices")
{
    Field q = Field::rationals();
    Scalar h(mpq_class(-3, 4));
    CHECK(to_json(h) == json("-3/4"));
    CHECK(scalar_from_json(to_json(h), q) == h);
    CHECK(scalar_from_json(json(5), q) == q.from_int(5));
    Field f = Field::prime(5);
    CHECK(to_json(f.from_int(3)) == json(3));
    CHECK(scalar_from_json(json(8), f) == f.from_int(3));
    CHECK_THROWS_AS(scalar_from_json(json("x"), q), ParseError);

    Matrix m = Matrix::from_ints(f, 2, 2, {1, 2, 3, 4});
    CHECK(matrix_from_rows(matrix_rows(m), f) == m);
    CHECK(endo_from_json(to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_rows(json::parse("[[1,2],[3]]"), f), ParseError);
}

TEST_CASE("grids round trip")
{
    std::mt19937_64 rng(1);
    Field q = Field::rationals();
    for (const auto& d : cycle_data(2, q, Sampling{3, &rng})) {
        EGrid g = grid_from_pair(rep_from_cycle_datum(d));
        CHECK(grid_from_json(to_json(g)) == g);
        CHECK(cycle_datum_from_json(to_json(d), q) == d);
    }
    GridSet s = classify_two_vertices(2, Field::prime(3));
    json j = gridset_to_json(s, 7);
    CHECK(j["count"] == s.size());
    CHECK(j["seed"] == 7);
    CHECK(gridset_from_json(j) == s);
    CHECK(gridset_from_json(j["grids"]) == s);

    json g = to_json(EGrid::flip(2, Field::prime(2), 2));
    g["n"] = 3;
    CHECK_THROWS_AS(grid_from_json(g), ParseError);
    CHECK_THROWS_AS(grid_from_json(json::parse("{}")), ParseError);
}

TEST_CASE("quivers and algebras round trip")
{
    Quiver c(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    json j = to_json(c);
    CHECK(j["arrows"][1] == json::array({1, 2}));
    CHECK(quiver_from_json(j) == c);
    Algebra a = Algebra::diagonal(Field::prime(3), 3);
    CHECK(algebra_from_json(to_json(a), Field::prime(3)) == a);
}

TEST_CASE("hochschild and omega round trip")
{
    std::mt19937_64 rng(2);
    HochschildData h = random_hochschild_data(Field::prime(3), 2, 2, rng);
    HochschildData back = hochschild_from_json(to_json(h));
    CHECK(back.B == h.B);
    CHECK(back.left == h.left);
    CHECK(back.right == h.right);
    CHECK(back.omega == h.omega);

    OmegaMatrix w = two_dim_action(Field::prime(5).from_int(2), Field::prime(5).zero(), 0, 1, 2);
    CHECK(omega_from_json(to_json(w), Field::prime(5)) == w);
}

TEST_CASE("axiom report uses 1-based witnesses")
{
    EGrid g(2, Field::prime(2), 1);
    g(0, 0) = Matrix::identity(Field::prime(2), 1);
    json r = to_json(check_axioms(g));
    CHECK(r["ok"] == false);
    bool found = false;
    for (const auto& a : r["axioms"])
        if (a["name"] == "column_sum") {
            CHECK(a["witness"] == json::array({2}));
            found = true;
        }
    CHECK(found);
}
