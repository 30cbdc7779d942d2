#include "permres/groebner.hpp"

#include <algorithm>

namespace permres {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> ms) {
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
    });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Monomial> kept;
    for (auto& m : ms) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); });
        if (!redundant) kept.push_back(std::move(m));
    }
    return kept;
}

/// x_{1,a1} x_{2,a2} + sign * x_{1,b1} x_{2,b2}
Polynomial grid_binomial(int n, int a1, int a2, int b1, int b2, int sign) {
    Polynomial p;
    p.add_term(Monomial::variable(grid_variable(1, a1, n)) * Monomial::variable(grid_variable(2, a2, n)), 1);
    p.add_term(Monomial::variable(grid_variable(1, b1, n)) * Monomial::variable(grid_variable(2, b2, n)), sign);
    return p;
}

Polynomial grid_monomial(int n, std::initializer_list<std::pair<int, int>> entries) {
    Monomial m;
    for (auto [r, c] : entries) m = m * Monomial::variable(grid_variable(r, c, n));
    return Polynomial::term(m, 1);
}

} // namespace

GeneratingSet::GeneratingSet(std::vector<Polynomial> generators, MonomialOrder order)
    : generators_(std::move(generators)), order_(std::move(order)) {
    for (const auto& g : generators_) {
        if (g.is_zero()) throw DomainError("zero generator");
        if (!g.homogeneous_degree()) throw DomainError("inhomogeneous generator");
        for (const auto& [m, c] : g.terms())
            for (const auto& f : m.factors())
                if (f.var >= order_.variable_count()) throw DomainError("generator uses a variable outside the ring");
        leading_.push_back(g.leading_monomial(order_));
    }
}

InitialIdeal::InitialIdeal(std::vector<Monomial> monomials, MonomialOrder order)
    : generators_(minimalize(std::move(monomials))), order_(std::move(order)) {
    std::sort(generators_.begin(), generators_.end(),
              [&](const Monomial& a, const Monomial& b) { return order_.greater(a, b); });
}

bool InitialIdeal::contains(const Monomial& m) const {
    return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
}

Polynomial normal_form(const Polynomial& f, const GeneratingSet& g) {
    if (g.size() == 0) throw DomainError("normal form needs a nonempty generating set");
    const auto& order = g.order();
    auto cmp = [&](const Monomial& a, const Monomial& b) { return order.less(a, b); };
    std::map<Monomial, mpq_class, decltype(cmp)> work(cmp);
    for (const auto& [m, c] : f.terms()) work.emplace(m, c);
    Polynomial remainder;
    const auto& leading = g.leading_monomials();
    while (!work.empty()) {
        auto top = std::prev(work.end());
        Monomial m = top->first;
        mpq_class c = top->second;
        work.erase(top);
        std::size_t k = 0;
        while (k < leading.size() && !leading[k].divides(m)) ++k;
        if (k == leading.size()) {
            remainder.add_term(m, c);
            continue;
        }
        const Polynomial& gk = g.generators()[k];
        Monomial shift = *leading[k].quotient_of(m);
        mpq_class factor = c / gk.coefficient(leading[k]);
        for (const auto& [gm, gc] : gk.terms()) {
            if (gm == leading[k]) continue;
            Monomial t = gm * shift;
            auto [it, inserted] = work.try_emplace(t, 0);
            it->second -= factor * gc;
            if (sgn(it->second) == 0) work.erase(it);
        }
    }
    return remainder;
}

GeneratingSet permanental_gb(int n) {
    if (n < 2) throw DomainError("permanental Groebner basis needs n >= 2");
    std::vector<Polynomial> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) gens.push_back(grid_binomial(n, i, j, j, i, 1));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) gens.push_back(grid_monomial(n, {{1, i}, {2, j}, {2, k}}));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) gens.push_back(grid_monomial(n, {{1, i}, {1, j}, {2, k}}));
    return GeneratingSet(std::move(gens), antidiagonal_order(n));
}

GeneratingSet determinantal_gb(int n) {
    if (n < 2) throw DomainError("determinantal Groebner basis needs n >= 2");
    std::vector<Polynomial> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) gens.push_back(grid_binomial(n, i, j, j, i, -1));
    return GeneratingSet(std::move(gens), diagonal_order(n));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    const auto& [lf, cf] = f.leading_term(order);
    const auto& [lg, cg] = g.leading_term(order);
    Monomial l = lf.lcm(lg);
    return f.times(*lf.quotient_of(l)).scaled(1 / cf) - g.times(*lg.quotient_of(l)).scaled(1 / cg);
}

GroebnerReport check_groebner(const GeneratingSet& g) {
    GroebnerReport report;
    const auto& gens = g.generators();
    const auto& leading = g.leading_monomials();
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            if (leading[a].coprime(leading[b])) {
                ++report.pairs_skipped_coprime;
                continue;
            }
            ++report.pairs_checked;
            if (!normal_form(s_polynomial(gens[a], gens[b], g.order()), g).is_zero() && report.spairs_reduce_to_zero) {
                report.spairs_reduce_to_zero = false;
                report.failure = "S-polynomial of generators " + std::to_string(a) + " and " + std::to_string(b) +
                                 " does not reduce to zero";
            }
        }
    }
    for (std::size_t a = 0; a < gens.size() && report.reduced; ++a) {
        if (gens[a].coefficient(leading[a]) != 1) {
            report.reduced = false;
            report.failure = "generator " + std::to_string(a) + " is not monic";
            break;
        }
        for (std::size_t b = 0; b < gens.size() && report.reduced; ++b) {
            if (a == b) continue;
            for (const auto& [m, c] : gens[a].terms()) {
                if (leading[b].divides(m)) {
                    report.reduced = false;
                    report.failure = "a term of generator " + std::to_string(a) +
                                     " is divisible by the leading monomial of generator " + std::to_string(b);
                    break;
                }
            }
        }
    }
    if (report.failure.empty() && !report.ok()) report.failure = "not a Groebner basis";
    return report;
}

bool verify_groebner(const GeneratingSet& g) { return check_groebner(g).ok(); }

bool is_groebner_basis(const GeneratingSet& g) { return check_groebner(g).spairs_reduce_to_zero; }

InitialIdeal initial_ideal(const GeneratingSet& g) { return InitialIdeal(g.leading_monomials(), g.order()); }

std::vector<Monomial> standard_monomials(const InitialIdeal& ideal, int degree, int variable_count) {
    std::vector<Monomial> out;
    for (auto& m : monomials_of_degree(variable_count, degree))
        if (!ideal.contains(m)) out.push_back(std::move(m));
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ideal.order().greater(a, b); });
    return out;
}

std::uint64_t hilbert_function(const InitialIdeal& ideal, int degree, int variable_count) {
    std::uint64_t count = 0;
    for (const auto& m : monomials_of_degree(variable_count, degree))
        if (!ideal.contains(m)) ++count;
    return count;
}

std::uint64_t ideal_hilbert_function(const InitialIdeal& ideal, int degree, int variable_count) {
    return monomial_count(variable_count, degree) - hilbert_function(ideal, degree, variable_count);
}

std::uint64_t monomial_count(int variable_count, int degree) {
    if (degree < 0 || variable_count < 0) return 0;
    if (variable_count == 0) return degree == 0 ? 1 : 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(variable_count + degree - 1),
                 static_cast<unsigned long>(degree));
    if (!c.fits_ulong_p()) throw DomainError("monomial count overflows 64 bits");
    return c.get_ui();
}

} // namespace permres
