#include "doctest.h"

#include "permres/bgg.hpp"
#include "permres/errors.hpp"
#include "permres/family.hpp"
#include "permres/koszul.hpp"
#include "permres/perp_basis.hpp"
#include "permres/permanental.hpp"
#include "support.hpp"

using namespace permres;

namespace {

BettiTable table(std::initializer_list<std::tuple<int, int, std::uint64_t>> entries) {
    BettiTable t;
    for (auto [i, j, b] : entries) t.set(i, j, b);
    return t;
}

const BettiTable kPermanental4 =
    table({{0, 0, 1}, {1, 2, 6}, {2, 4, 22}, {3, 5, 24}, {3, 6, 4}, {4, 6, 6}, {4, 7, 8}, {5, 8, 3}});

} // namespace

TEST_CASE("Koszul homology of a hypersurface") {
    auto gens = permanental_generators(2).generators;
    GradedQuotientRing q(GeneratingSet(gens, antidiagonal_order(2)), 4, 4, Grading::grid(2));
    CHECK(koszul_tor_betti(q, 4, 7) == table({{0, 0, 1}, {1, 2, 1}}));
}

TEST_CASE("Koszul homology of R/P for n = 3 and n = 4") {
    CHECK(permanental_koszul_table(3) == closed_form_betti(3));
    CHECK(permanental_koszul_table(4) == kPermanental4);
}

TEST_CASE("Eagon-Northcott table of the 2 x 4 minors") {
    CHECK(determinantal_koszul_table(4) == table({{0, 0, 1}, {1, 2, 6}, {2, 3, 8}, {3, 4, 3}}));
    CHECK(determinantal_koszul_table(3).projective_dimension() == 2);
}

TEST_CASE("Koszul pieces square to zero") {
    auto q = permanental_quotient(3);
    for (int i = 1; i <= 5; ++i)
        for (int j = i; j <= i + 4; ++j) {
            auto piece = koszul_piece(q, i, j);
            CHECK(permres::test::product_vanishes(piece.incoming, piece.outgoing));
        }
}

TEST_CASE("BGG homology") {
    auto dual = permanental_dual(4);
    CHECK(bgg_homology_dim(dual, 3, 6) == 4);
    for (int s = 4; s <= 12; ++s) CHECK(bgg_homology_dim(dual, 4, s) == 0);
    auto initial = permanental_initial_dual(3);
    CHECK(bgg_homology_dim(initial, 3, 6) == 1);
    CHECK(permanental_bgg_table(4) == kPermanental4);
}

TEST_CASE("BGG homology matches Koszul homology for R/P and R/in(P)") {
    for (int n = 3; n <= 4; ++n) {
        CAPTURE(n);
        CHECK(permanental_bgg_table(n) == permanental_koszul_table(n));
        auto initial_koszul = koszul_tor_betti(permanental_initial_quotient(n), 2 * n, 2 * n + 4, {}, 4);
        auto initial_bgg = bgg_betti_table(permanental_initial_dual(n), 2 * n, 4);
        CHECK(initial_bgg == initial_koszul);
        CHECK(initial_koszul == permanental_hochster_table(n));
    }
}

TEST_CASE("BGG pieces square to zero") {
    auto dual = permanental_dual(3);
    for (int ell = 0; ell <= 3; ++ell)
        for (int s = ell; s <= ell + 6; ++s) {
            auto piece = bgg_piece(dual, ell, s);
            CHECK(permres::test::product_vanishes(piece.incoming, piece.ambient));
        }
}

TEST_CASE("perp bases") {
    for (int n = 2; n <= 4; ++n) {
        PerpComplexes perp(n);
        CHECK(perp.basis(0).size() == 1);
        CHECK(perp.basis(1).size() == static_cast<std::size_t>(2 * n));
        CHECK(perp.basis(2).binding.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    }
    CHECK_THROWS_AS(PerpComplexes(6), DomainError);
    auto q = binding_quadric(3, 1, 2);
    CHECK(q.size() == 2);
}

TEST_CASE("worked anticommutativity value") {
    // v = y1i^2 y2j - y1i y2i y1j with (i, j) = (1, 2) on the 2 x 2 grid.
    const int n = 2;
    auto y = [](int r, int c) { return grid_variable(r, c, n); };
    PerpComplexes perp(n);
    ExteriorElement v;
    v.add_term(WedgeMonomial{}, Monomial::variable(y(1, 1), 2) * Monomial::variable(y(2, 2)), 1);
    v.add_term(WedgeMonomial{}, Monomial::variable(y(1, 1)) * Monomial::variable(y(2, 1)) * Monomial::variable(y(1, 2)),
               -1);
    auto lhs = dual_koszul_differential(perp.full_to_initial(2, dual_koszul_differential(v, 2 * n)), 2 * n);
    ExteriorElement expected;
    expected.add_ordered({y(1, 2), y(1, 1)}, Monomial::variable(y(2, 1)), -1);
    expected.add_ordered({y(2, 1), y(1, 1)}, Monomial::variable(y(1, 2)), -1);
    CHECK(lhs == expected);

    ExteriorElement w;
    w.add_term(WedgeMonomial{}, Monomial::variable(y(1, 1), 2) * Monomial::variable(y(2, 2)), 1);
    auto rhs = dual_koszul_differential(perp.initial_to_full(2, dual_koszul_differential(w, 2 * n)), 2 * n);
    CHECK(rhs == expected.scaled(-1));
}

TEST_CASE("anticommutativity of the two differentials") {
    for (int n = 2; n <= 4; ++n) {
        auto report = anticommutativity_report(n);
        CHECK(report.ok);
        CHECK(report.failing_levels.empty());
    }
}

TEST_CASE("psi elements are cycles transferred from non-boundaries") {
    auto r2 = psi_vanishing_report(2);
    CHECK(r2.ok);
    CHECK(r2.triples == 0);
    auto r3 = psi_vanishing_report(3);
    CHECK_MESSAGE(r3.ok, r3.failure);
    CHECK(r3.triples == 1);
    CHECK(dual_koszul_differential(psi_element(3, 1, 2, 3), 6).is_zero());
    auto r4 = psi_vanishing_report(4);
    CHECK_MESSAGE(r4.ok, r4.failure);
    CHECK(r4.triples == 4);
}

TEST_CASE("third rows and semicontinuity for small n") {
    CHECK(third_row_equality_check(3));
    CHECK(third_row_equality_check(4));
    CHECK(permanental_koszul_table(4).restricted_to_row(3) == table({{3, 6, 4}, {4, 7, 8}, {5, 8, 3}}));
    CHECK(semicontinuity_check(3));
    CHECK(semicontinuity_check(4));
}
