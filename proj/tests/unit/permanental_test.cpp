#include "doctest.h"

#include "permres/errors.hpp"
#include "permres/permanental.hpp"
#include "permres/stanley_reisner.hpp"
#include "support.hpp"

using namespace permres;
using permres::test::choose;

namespace {

BettiTable table(std::initializer_list<std::tuple<int, int, std::uint64_t>> entries) {
    BettiTable t;
    for (auto [i, j, b] : entries) t.set(i, j, b);
    return t;
}

// The n = 4 permanental table: 1; 6; 22; 24 + 4; 6 + 8; 3.
const BettiTable kPermanental4 =
    table({{0, 0, 1}, {1, 2, 6}, {2, 4, 22}, {3, 5, 24}, {3, 6, 4}, {4, 6, 6}, {4, 7, 8}, {5, 8, 3}});

} // namespace

TEST_CASE("generators") {
    auto p2 = permanental_generators(2).generators;
    REQUIRE(p2.size() == 1);
    auto x = [](int r, int c) { return Monomial::variable(grid_variable(r, c, 2)); };
    CHECK(p2[0] == Polynomial::term(x(1, 1) * x(2, 2), 1) + Polynomial::term(x(1, 2) * x(2, 1), 1));
    auto d2 = determinantal_generators(2);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0] == Polynomial::term(x(1, 1) * x(2, 2), 1) - Polynomial::term(x(1, 2) * x(2, 1), 1));
    CHECK(permanental_generators(3).generators.size() == 3);
    CHECK(determinantal_generators(4).size() == 6);
    CHECK_THROWS_AS(permanental_generators(1), DomainError);
}

TEST_CASE("closed form for n = 3 and n = 4") {
    CHECK(closed_form_betti(4) == kPermanental4);
    CHECK(closed_form_betti(4).projective_dimension() == 5);
    CHECK(closed_form_betti(4).regularity() == 3);
    CHECK(closed_form_entry(4, 5, 7) == 0);
    auto t3 = closed_form_betti(3);
    CHECK(t3 == table({{0, 0, 1}, {1, 2, 3}, {2, 4, 3}, {3, 6, 1}}));
    CHECK(t3.projective_dimension() == 3);
    CHECK(t3.regularity() == 3);
    CHECK_THROWS_AS(closed_form_betti(2), DomainError);
}

TEST_CASE("third-row and second-row formulas") {
    CHECK(third_row_initial(4, 3) == 4);
    CHECK(third_row_initial(3, 3) == 1);
    for (int k = 0; k <= 8; ++k)
        if (k != 3) CHECK(third_row_initial(3, k) == 0);
    CHECK(second_row_difference(4, 2) == 22);
    CHECK(second_row_difference(4, 3) == 24);
    CHECK(second_row_difference(4, 4) == 2);
    // The n = 5, k = 4 entry, compared with Hochster's formula on in(P).
    auto hochster5 = permanental_hochster_table(5);
    CHECK(third_row_initial(5, 4) == hochster5.get(4, 7));
    CHECK(third_row_initial(5, 4) == 40);
}

TEST_CASE("closed form shape for n = 3..12") {
    for (int n = 3; n <= 12; ++n) {
        CAPTURE(n);
        auto t = closed_form_betti(n);
        CHECK(t.projective_dimension() == 2 * n - 3);
        CHECK(t.regularity() == 3);
        for (const auto& [k, b] : t.entries()) {
            int r = k.second - k.first;
            CHECK(b > 0);
            if (k.first >= 2) CHECK((r == 2 || r == 3));
        }
        CHECK(t.get(1, 2) == static_cast<std::uint64_t>(n * (n - 1) / 2));
        for (int k = 0; k <= 2 * n; ++k) CHECK(third_row_initial(n, k) == closed_form_entry(n, k, k + 3));
    }
}

TEST_CASE("second-row differences telescope to the closed form") {
    for (int n = 3; n <= 8; ++n)
        for (int k = 2; k <= 2 * n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(closed_form_entry(n, k, k + 2) == closed_form_entry(n, k - 1, k + 2) + second_row_difference(n, k));
        }
}

TEST_CASE("f-vector formulas agree with face enumeration") {
    for (int n = 3; n <= 8; ++n) {
        CAPTURE(n);
        auto enumerated = f_vector(delta_complex(n));
        CHECK(f_vector_closed_form(n) == enumerated);
        mpz_class at_one = 0;
        for (const auto& c : f_polynomial(n)) at_one += c;
        mpz_class faces = 0;
        for (auto c : enumerated.counts) faces += c;
        CHECK(at_one == faces);
    }
    CHECK(f_vector_closed_form(3).counts == std::vector<std::uint64_t>{1, 6, 12, 8});
    CHECK(f_vector_closed_form(4).f(3) == 2);
    // f_1 = 2C(n,2) + C(n+1,2) and f_2 = 2C(n,3) + 2C(n,2) against a scan of all subsets.
    for (int n = 3; n <= 6; ++n) {
        auto counts = permres::test::size_counts(permres::test::faces_by_scan(permanental_initial_ideal(n)));
        CHECK(counts[2] == 2 * choose(n, 2) + choose(n + 1, 2));
        CHECK(counts[3] == 2 * choose(n, 3) + 2 * choose(n, 2));
    }
}

TEST_CASE("alternating Betti sums give the Hilbert series numerator") {
    for (int n = 3; n <= 6; ++n) {
        int trunc = 2 * n + 3;
        auto hs = hilbert_series_from_f(delta_complex(n), trunc);
        CHECK(hilbert_numerator(hs, 2 * n, trunc) == betti_numerator(closed_form_betti(n), trunc));
    }
}

TEST_CASE("column-pattern fast path equals the exhaustive Hochster computation") {
    for (int n = 3; n <= 5; ++n) CHECK(permanental_hochster_table(n) == hochster_betti_table(permanental_initial_ideal(n)));
}

TEST_CASE("Hochster table of in(P) against the closed form") {
    for (int n = 3; n <= 6; ++n) {
        CAPTURE(n);
        auto raw = permanental_hochster_table(n);
        auto closed = closed_form_betti(n);
        CHECK(raw.regularity() == 3);
        CHECK(raw.projective_dimension() == 2 * n - 3);
        CHECK(raw.restricted_to_row(3) == closed.restricted_to_row(3));
        CHECK(raw.restricted_to_row(0) == closed.restricted_to_row(0));
        CHECK(closed.entrywise_leq(raw));
        // in(P) has the cubic generators, so the tables differ; the excess is
        // exactly a set of consecutive cancellations.
        CHECK(raw.get(1, 3) == 2 * choose(n, 3));
        CHECK(raw != closed);
        CHECK(cancellation_pairs(raw, closed).has_value());
    }
}

TEST_CASE("cancellation pairs") {
    auto small = table({{0, 0, 1}, {1, 2, 3}});
    auto big = table({{0, 0, 1}, {1, 2, 3}, {1, 3, 2}, {2, 3, 2}});
    auto pairs = cancellation_pairs(big, small);
    REQUIRE(pairs.has_value());
    CHECK(*pairs == table({{1, 3, 2}}));
    CHECK_FALSE(cancellation_pairs(table({{0, 0, 1}, {1, 3, 1}}), small).has_value());
    CHECK(cancellation_pairs(small, small)->empty());
}
