// Evaluates every acceptance criterion and prints one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "permres/family.hpp"
#include "permres/groebner.hpp"
#include "permres/permanental.hpp"
#include "permres/perp_basis.hpp"
#include "permres/stanley_reisner.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace permres;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

BettiTable table(std::initializer_list<std::tuple<int, int, std::uint64_t>> entries) {
    BettiTable t;
    for (auto [i, j, b] : entries) t.set(i, j, b);
    return t;
}

std::string entries_of(const BettiTable& t) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, b] : t.entries()) {
        out << (first ? "" : " ") << "b" << k.first << "," << k.second << "=" << b;
        first = false;
    }
    return out.str();
}

// All differing entries, as "b_i,j=a/b".
std::string differences(const BettiTable& a, const BettiTable& b) {
    std::set<BettiTable::Key> keys;
    for (const auto& [k, v] : a.entries()) keys.insert(k);
    for (const auto& [k, v] : b.entries()) keys.insert(k);
    std::ostringstream out;
    bool first = true;
    for (auto [i, j] : keys) {
        if (a.get(i, j) == b.get(i, j)) continue;
        out << (first ? "" : " ") << "b" << i << "," << j << "=" << a.get(i, j) << "/" << b.get(i, j);
        first = false;
    }
    return out.str();
}

OracleOptions parallel_options() {
    OracleOptions o;
    o.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return o;
}

Monomial xv(int r, int c, int n) { return Monomial::variable(grid_variable(r, c, n)); }

std::set<Monomial> stated_initial_families(int n) {
    std::set<Monomial> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) out.insert(xv(1, i, n) * xv(2, j, n));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                out.insert(xv(1, i, n) * xv(2, j, n) * xv(2, k, n));
                out.insert(xv(1, i, n) * xv(1, j, n) * xv(2, k, n));
            }
    return out;
}

const BettiTable kGolden4 =
    table({{0, 0, 1}, {1, 2, 6}, {2, 4, 22}, {3, 5, 24}, {3, 6, 4}, {4, 6, 6}, {4, 7, 8}, {5, 8, 3}});

Outcome golden_table() {
    Outcome o;
    auto closed = closed_form_betti(4);
    auto hochster = permanental_hochster_table(4);
    auto koszul = permanental_koszul_table(4);
    auto bgg = permanental_bgg_table(4);
    const std::pair<const char*, const BettiTable*> methods[] = {
        {"closed", &closed}, {"hochster", &hochster}, {"koszul", &koszul}, {"bgg", &bgg}};
    for (auto [name, t] : methods) {
        if (*t == kGolden4) continue;
        std::string why = std::string(name) + " differs (got/golden: " + differences(*t, kGolden4) + ")";
        if (auto pairs = cancellation_pairs(*t, kGolden4)) why += ", excess is cancellation pairs " + entries_of(*pairs);
        o.fail(why);
    }
    if (o.pass) o.detail = "all four methods equal the golden table";
    return o;
}

Outcome closed_equals_hochster() {
    Outcome o;
    for (int n = 3; n <= 6; ++n) {
        auto closed = closed_form_betti(n);
        auto raw = permanental_hochster_table(n, {.jobs = parallel_options().jobs});
        if (closed.projective_dimension() != 2 * n - 3 || raw.projective_dimension() != 2 * n - 3)
            o.fail("n=" + std::to_string(n) + " pdim");
        if (closed.regularity() != 3 || raw.regularity() != 3) o.fail("n=" + std::to_string(n) + " reg");
        if (raw == closed) continue;
        std::string why = "n=" + std::to_string(n) + " hochster/closed: " + differences(raw, closed);
        why += cancellation_pairs(raw, closed) ? " (cancellation pairs only)" : " (not cancellation pairs)";
        o.fail(why);
    }
    if (o.pass) o.detail = "n=3..6";
    else o.detail += "; pdim and reg hold for n=3..6";
    return o;
}

Outcome third_rows() {
    Outcome o;
    for (int n = 3; n <= 5; ++n)
        if (!third_row_equality_check(n, parallel_options())) o.fail("n=" + std::to_string(n));
    if (o.pass) o.detail = "n=3..5";
    return o;
}

Outcome eagon_northcott() {
    Outcome o;
    auto t = determinantal_koszul_table(4);
    auto expected = table({{0, 0, 1}, {1, 2, 6}, {2, 3, 8}, {3, 4, 3}});
    if (t != expected) o.fail(differences(t, expected));
    else o.detail = entries_of(t);
    return o;
}

Outcome groebner_families() {
    Outcome o;
    for (int n = 2; n <= 5; ++n) {
        auto g = permanental_gb(n);
        if (!verify_groebner(g)) o.fail("n=" + std::to_string(n) + " not a Groebner basis");
        auto in = initial_ideal(g);
        std::set<Monomial> computed(in.generators().begin(), in.generators().end());
        if (computed != stated_initial_families(n)) o.fail("n=" + std::to_string(n) + " initial ideal");
    }
    if (o.pass) o.detail = "n=2..5";
    return o;
}

Outcome cubic_growth() {
    Outcome o;
    for (int n = 3; n <= 8; ++n) {
        auto in = initial_ideal(permanental_gb(n));
        auto h2 = ideal_hilbert_function(in, 2, 2 * n);
        auto h3 = ideal_hilbert_function(in, 3, 2 * n);
        if (h2 != static_cast<std::uint64_t>(n * (n - 1) / 2))
            o.fail("n=" + std::to_string(n) + " HF(2)=" + std::to_string(h2));
        if (h3 != static_cast<std::uint64_t>(2 * n) * h2)
            o.fail("n=" + std::to_string(n) + " HF(3)=" + std::to_string(h3));
    }
    if (o.pass) o.detail = "n=3..8";
    return o;
}

Outcome numerator_identity() {
    Outcome o;
    for (int n = 3; n <= 6; ++n) {
        int trunc = 2 * n + 3;
        auto hs = hilbert_series_from_f(delta_complex(n), trunc);
        if (hilbert_numerator(hs, 2 * n, trunc) != betti_numerator(closed_form_betti(n), trunc))
            o.fail("n=" + std::to_string(n));
    }
    if (o.pass) o.detail = "n=3..6, truncated at 2n+3";
    return o;
}

Outcome anticommutativity_and_psi() {
    Outcome o;
    for (int n = 2; n <= 5; ++n) {
        if (!anticommutativity_check(n)) o.fail("anticommutativity n=" + std::to_string(n));
        auto psi = psi_vanishing_report(n);
        if (!psi.ok) o.fail("psi n=" + std::to_string(n) + ": " + psi.failure);
    }
    if (o.pass) o.detail = "n=2..5";
    return o;
}

Outcome property_suites() {
    using namespace permres::test;
    constexpr int cases = 200;
    constexpr int vertices = 7;
    Outcome o;
    const std::pair<const char*, std::function<PropertyResult()>> suites[] = {
        {"alexander-involution", [] { return alexander_dual_involution(cases, vertices, 1041); }},
        {"monomialization", [] { return monomialization_is_dual_ideal(cases, vertices, 1042); }},
        {"hochster-koszul", [] { return hochster_matches_koszul(cases, vertices, 1043); }},
        {"euler", [] { return euler_characteristic_consistency(cases, vertices, 1044); }},
        {"d-squared", [] { return differentials_square_to_zero(cases, vertices, 1045); }},
        {"two-prime", [] { return two_prime_rank_agreement(cases, vertices, 1046); }},
    };
    std::string counts;
    for (const auto& [name, run] : suites) {
        auto r = run();
        counts += std::string(counts.empty() ? "" : " ") + name + "=" + std::to_string(r.cases);
        if (r.cases < cases) o.fail(std::string(name) + " ran only " + std::to_string(r.cases) + " cases");
        if (!r.ok()) o.fail(std::string(name) + ": " + std::to_string(r.failures) + " failures, first " + r.first_failure);
    }
    if (o.pass) o.detail = counts;
    return o;
}

Outcome semicontinuity() {
    Outcome o;
    for (int n = 3; n <= 5; ++n)
        if (!semicontinuity_check(n, parallel_options())) o.fail("n=" + std::to_string(n));
    if (o.pass) o.detail = "n=3..5";
    return o;
}

} // namespace

int main() {
    const std::pair<const char*, Outcome (*)()> criteria[] = {
        {"n=4 golden table, four methods", golden_table},
        {"closed form equals Hochster on in(P), n=3..6", closed_equals_hochster},
        {"third rows of R/P and R/in(P) coincide", third_rows},
        {"Eagon-Northcott table of D_2x4", eagon_northcott},
        {"Groebner basis and initial ideal families", groebner_families},
        {"HF_P(3) = 2n HF_P(2)", cubic_growth},
        {"Hilbert numerator equals alternating Betti sum", numerator_identity},
        {"anticommutativity and psi vanishing", anticommutativity_and_psi},
        {"property suites", property_suites},
        {"semicontinuity", semicontinuity},
    };
    int failed = 0;
    int index = 0;
    for (auto [title, run] : criteria) {
        ++index;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::printf("%s %d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", index, title, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
