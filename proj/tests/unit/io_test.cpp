#include "doctest.h"

#include "permres/errors.hpp"
#include "permres/io.hpp"
#include "permres/permanental.hpp"
#include "support.hpp"

using namespace permres;

TEST_CASE("parsing grid and generic variables") {
    auto grid = VariableLayout::grid(3);
    auto m = parse_monomial("x[1,2]*x[2,1]^2", grid);
    CHECK(m == Monomial::variable(1) * Monomial::variable(3, 2));
    CHECK(format_monomial(m, grid) == "x[1,2]*x[2,1]^2");
    auto generic = VariableLayout::generic(4);
    CHECK(parse_monomial("x[4]", generic) == Monomial::variable(3));
    CHECK(format_variable(0, generic) == "x[1]");
    CHECK(parse_monomial("1", generic).is_one());
    CHECK_THROWS_AS(parse_monomial("x[5]", generic), DomainError);
    CHECK_THROWS_AS(parse_monomial("x[0]", generic), DomainError);
    CHECK_THROWS_AS(parse_monomial("x[1,2]", generic), DomainError);
    CHECK_THROWS_AS(parse_monomial("x[3,1]", grid), DomainError);
    CHECK_THROWS_AS(parse_monomial("y[1]", generic), DomainError);
}

TEST_CASE("parsing polynomials") {
    auto layout = VariableLayout::generic(3);
    auto f = parse_polynomial("x[1]*x[2] - 3/2*x[3]^2 + 2", layout);
    Polynomial expected = Polynomial::term(Monomial::variable(0) * Monomial::variable(1), 1);
    expected.add_term(Monomial::variable(2, 2), mpq_class(-3, 2));
    expected.add_term(Monomial{}, 2);
    CHECK(f == expected);
    CHECK(parse_polynomial("-x[1] + x[1]", layout).is_zero());
    CHECK_THROWS_AS(parse_polynomial("", layout), DomainError);
    CHECK_THROWS_AS(parse_polynomial("x[1] x[2]", layout), DomainError);
    CHECK_THROWS_AS(parse_polynomial("1/0*x[1]", layout), DomainError);
}

TEST_CASE("polynomial text round-trips") {
    permres::test::Rng rng(51);
    auto layout = VariableLayout::grid(3);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial f;
        for (int t = 0; t < 4; ++t) {
            auto ms = monomials_of_degree(6, permres::test::uniform(rng, 0, 3));
            mpq_class c(permres::test::uniform(rng, -7, 7), permres::test::uniform(rng, 1, 4));
            c.canonicalize();
            f.add_term(ms[rng() % ms.size()], c);
        }
        CHECK(parse_polynomial(format_polynomial(f, layout), layout) == f);
    }
}

TEST_CASE("ideal files") {
    auto spec = parse_ideal_json(R"({"variables": 4, "generators": ["x[1]*x[3]", "x[1]*x[4]"]})");
    CHECK(spec.layout.variable_count == 4);
    auto sq = as_squarefree_monomial_ideal(spec);
    REQUIRE(sq.has_value());
    CHECK(sq->generators() == std::vector<VertexSet>{0b0101, 0b1001});
    auto again = parse_ideal_json(ideal_to_json(spec));
    CHECK(again.generators == spec.generators);

    auto grid = parse_ideal_json(R"({"variables": {"rows": 2, "cols": 2}, "generators": ["x[1,1]*x[2,2] + x[1,2]*x[2,1]"]})");
    CHECK(grid.generators == permanental_generators(2).generators);
    CHECK_FALSE(as_squarefree_monomial_ideal(grid).has_value());

    CHECK_THROWS_AS(parse_ideal_json("{"), DomainError);
    CHECK_THROWS_AS(parse_ideal_json(R"({"variables": 2})"), DomainError);
    CHECK_THROWS_AS(parse_ideal_json(R"({"variables": "two", "generators": []})"), DomainError);
    CHECK_THROWS_AS(parse_ideal_json(R"({"variables": 2, "generators": [3]})"), DomainError);
    CHECK_THROWS_AS(read_ideal_file("/nonexistent/ideal.json"), DomainError);
}

TEST_CASE("complex files") {
    auto delta = parse_complex_json(R"({"vertices": 4, "facets": [[0, 1], [1, 2, 3]]})");
    CHECK(delta.facets() == std::vector<VertexSet>{0b0011, 0b1110});
    CHECK(parse_complex_json(complex_to_json(delta)) == delta);
    CHECK_THROWS_AS(parse_complex_json(R"({"vertices": 2, "facets": [[0, 2]]})"), DomainError);
}

TEST_CASE("Betti table JSON round-trips") {
    for (int n = 3; n <= 6; ++n) {
        auto t = closed_form_betti(n);
        CHECK(betti_from_json(betti_to_json(t, VariableLayout::grid(n))) == t);
    }
    CHECK_THROWS_AS(betti_from_json(R"({"entries": [{"i": 0}]})"), DomainError);
}

TEST_CASE("rendering") {
    auto t = closed_form_betti(3);
    CHECK(render_betti_m2(t) ==
          "       0 1 2 3\n"
          "total: 1 3 3 1\n"
          "    0: 1 . . .\n"
          "    1: . 3 . .\n"
          "    2: . . 3 .\n"
          "    3: . . . 1\n");
    CHECK(render_betti_text(t).find("pdim: 3\nreg: 3\n") != std::string::npos);
    CHECK(render_betti_csv(t) == "i,j,b\n0,0,1\n1,2,3\n2,4,3\n3,6,1\n");
}
