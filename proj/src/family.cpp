#include "permres/family.hpp"

#include "permres/errors.hpp"
#include "permres/permanental.hpp"

namespace permres {

namespace {

GeneratingSet initial_generating_set(int n) {
    std::vector<Polynomial> gens;
    const auto ideal = permanental_initial_ideal(n);
    for (auto g : ideal.generators()) gens.push_back(Polynomial::term(Monomial::from_mask(g), 1));
    return GeneratingSet(std::move(gens), antidiagonal_order(n));
}

std::vector<Polynomial> initial_generators(int n) { return initial_generating_set(n).generators(); }

} // namespace

GradedQuotientRing permanental_quotient(int n, int max_degree) {
    return GradedQuotientRing(permanental_gb(n), 2 * n, max_degree, Grading::grid(n));
}

GradedQuotientRing permanental_initial_quotient(int n, int max_degree) {
    return GradedQuotientRing(initial_generating_set(n), 2 * n, max_degree, Grading::fine(2 * n));
}

GradedQuotientRing determinantal_quotient(int n, int max_degree) {
    return GradedQuotientRing(determinantal_gb(n), 2 * n, max_degree, Grading::grid(n));
}

DualQuotient permanental_dual(int n, int max_degree) {
    return DualQuotient(permanental_generators(n).generators, 2 * n, max_degree, Grading::grid(n));
}

DualQuotient permanental_initial_dual(int n, int max_degree) {
    return DualQuotient(initial_generators(n), 2 * n, max_degree, Grading::fine(2 * n));
}

BettiTable permanental_koszul_table(int n, const OracleOptions& options) {
    return koszul_tor_betti(permanental_quotient(n), 2 * n, 2 * n + kFamilyMaxRow, options, kFamilyMaxRow);
}

BettiTable permanental_bgg_table(int n, const OracleOptions& options) {
    return bgg_betti_table(permanental_dual(n), 2 * n, kFamilyMaxRow, options);
}

BettiTable determinantal_koszul_table(int n, const OracleOptions& options) {
    return koszul_tor_betti(determinantal_quotient(n), 2 * n, 2 * n + kFamilyMaxRow, options, kFamilyMaxRow);
}

bool third_row_equality_check(int n, const OracleOptions& options) {
    if (n < 3 || n > 5) throw DomainError("third-row comparison runs for 3 <= n <= 5");
    HochsterOptions h;
    h.primes = options.primes;
    h.jobs = options.jobs;
    auto initial = permanental_hochster_table(n, h).restricted_to_row(3);
    auto full = permanental_koszul_table(n, options).restricted_to_row(3);
    return initial == full;
}

bool semicontinuity_check(int n, const OracleOptions& options) {
    HochsterOptions h;
    h.primes = options.primes;
    h.jobs = options.jobs;
    return permanental_koszul_table(n, options).entrywise_leq(permanental_hochster_table(n, h));
}

} // namespace permres
