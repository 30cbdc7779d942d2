#include "doctest.h"

#include <set>

#include "permres/errors.hpp"
#include "permres/groebner.hpp"
#include "permres/permanental.hpp"
#include "support.hpp"

using namespace permres;

namespace {

Monomial x(int r, int c, int n) { return Monomial::variable(grid_variable(r, c, n)); }

/// The three families listed for in(P): x1i x2j (i > j), x1i x2j x2k and
/// x1i x1j x2k (i < j < k), written out directly.
std::set<Monomial> stated_initial_families(int n) {
    std::set<Monomial> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) out.insert(x(1, i, n) * x(2, j, n));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                out.insert(x(1, i, n) * x(2, j, n) * x(2, k, n));
                out.insert(x(1, i, n) * x(1, j, n) * x(2, k, n));
            }
    return out;
}

/// dim of the degree-d part of the ideal spanned by the generators: the rank
/// of all products (degree d - deg g monomial) * g. No Groebner basis involved.
std::size_t ideal_dimension_by_span(const std::vector<Polynomial>& gens, int nu, int d) {
    std::vector<Polynomial> rows;
    for (const auto& g : gens) {
        int shift = d - *g.homogeneous_degree();
        if (shift < 0) continue;
        for (const auto& m : monomials_of_degree(nu, shift)) rows.push_back(g.times(m));
    }
    std::map<Monomial, std::size_t> column;
    for (const auto& m : monomials_of_degree(nu, d)) column.emplace(m, column.size());
    RationalMatrixBuilder b(rows.size(), column.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [m, c] : rows[r].terms()) b.add(r, column.at(m), c);
    return verified_rank(std::move(b).build(), default_primes());
}

} // namespace

TEST_CASE("normal forms") {
    auto g2 = permanental_gb(2);
    auto f = Polynomial::term(x(1, 2, 2) * x(2, 1, 2), 1);
    CHECK(normal_form(f, g2) == Polynomial::term(x(1, 1, 2) * x(2, 2, 2), -1));
    auto standard = Polynomial::term(x(1, 1, 2) * x(2, 2, 2), 1);
    CHECK(normal_form(standard, g2) == standard);
    auto g3 = permanental_gb(3);
    CHECK(normal_form(Polynomial::term(x(1, 1, 3) * x(1, 2, 3) * x(2, 3, 3), 1), g3).is_zero());
}

TEST_CASE("reduction is idempotent and f - NF(f) lies in the ideal") {
    permres::test::Rng rng(21);
    auto g = permanental_gb(4);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial f;
        for (int t = 0; t < 4; ++t) {
            auto ms = monomials_of_degree(8, permres::test::uniform(rng, 1, 3));
            f.add_term(ms[rng() % ms.size()], permres::test::uniform(rng, -5, 5));
        }
        auto r = normal_form(f, g);
        CHECK(normal_form(r, g) == r);
        CHECK(normal_form(f - r, g).is_zero());
    }
}

TEST_CASE("generator counts of the permanental Groebner basis") {
    CHECK(permanental_gb(2).size() == 1);
    CHECK(permanental_gb(3).size() == 5);
    CHECK(permanental_gb(4).size() == 14);
    CHECK_THROWS_AS(permanental_gb(1), DomainError);
    CHECK(permanental_generators(2).generators.size() == 1);
    CHECK(permanental_generators(4).generators.size() == 6);
}

TEST_CASE("the permanental generating set is a reduced Groebner basis with the stated initial ideal") {
    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        auto g = permanental_gb(n);
        auto report = check_groebner(g);
        CHECK(report.ok());
        auto in = initial_ideal(g);
        std::set<Monomial> computed(in.generators().begin(), in.generators().end());
        CHECK(computed == stated_initial_families(n));
    }
}

TEST_CASE("a non-Groebner set is rejected") {
    Polynomial a = Polynomial::term(Monomial::variable(0, 2), 1);
    Polynomial b = Polynomial::term(Monomial::variable(0) * Monomial::variable(1), 1) -
                   Polynomial::term(Monomial::variable(1, 2), 1);
    GeneratingSet g({a, b}, MonomialOrder::lex(2));
    CHECK_FALSE(verify_groebner(g));
    // The S-pair x2 * a - x1 * b = x1 x2^2 reduces to x2^3.
    auto s = s_polynomial(a, b, g.order());
    CHECK(normal_form(s, g) == Polynomial::term(Monomial::variable(1, 3), 1));
}

TEST_CASE("the determinantal minors form a Groebner basis under the diagonal order") {
    for (int n = 2; n <= 5; ++n) CHECK(verify_groebner(determinantal_gb(n)));
}

TEST_CASE("standard monomials and Hilbert function") {
    auto in3 = initial_ideal(permanental_gb(3));
    CHECK(standard_monomials(in3, 0, 6).size() == 1);
    CHECK(standard_monomials(in3, 2, 6).size() == 18);
    CHECK(standard_monomials(in3, 3, 6).size() == 38);
    CHECK(ideal_hilbert_function(in3, 1, 6) == 0);
    CHECK(ideal_hilbert_function(in3, 3, 6) == 18);
    // 48 = 2n C(n,2): the cubic count includes non-squarefree multiples such as x11^2 x22.
    auto in4 = initial_ideal(permanental_gb(4));
    CHECK(ideal_hilbert_function(in4, 3, 8) == 48);
    CHECK(hilbert_function(in4, 3, 8) == 72);
}

TEST_CASE("standard plus initial monomials fill each degree") {
    for (int n = 2; n <= 4; ++n) {
        auto in = initial_ideal(permanental_gb(n));
        for (int d = 0; d <= 6; ++d)
            CHECK(hilbert_function(in, d, 2 * n) + ideal_hilbert_function(in, d, 2 * n) == monomial_count(2 * n, d));
    }
}

TEST_CASE("Hilbert function of P agrees with that of in(P)") {
    for (int n = 2; n <= 4; ++n) {
        auto gens = permanental_gb(n);
        auto in = initial_ideal(gens);
        for (int d = 0; d <= (n < 4 ? 6 : 4); ++d) {
            CAPTURE(n);
            CAPTURE(d);
            CHECK(ideal_dimension_by_span(gens.generators(), 2 * n, d) == ideal_hilbert_function(in, d, 2 * n));
        }
    }
}

TEST_CASE("no linear syzygies: the cubic part of P has dimension 2n times the quadric part") {
    for (int n = 3; n <= 6; ++n) {
        auto quadrics = permanental_generators(n).generators;
        auto by_span = ideal_dimension_by_span(quadrics, 2 * n, 3);
        auto expected = static_cast<std::size_t>(2 * n * n * (n - 1) / 2);
        CHECK(by_span == expected);
        CHECK(ideal_hilbert_function(initial_ideal(permanental_gb(n)), 3, 2 * n) == expected);
    }
}
