#include "permres/stanley_reisner.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "permres/errors.hpp"
#include "permres/parallel.hpp"

namespace permres {

namespace {

constexpr int kMaxEnumerableVertices = 24;

void require_enumerable(int variable_count) {
    if (variable_count > kMaxEnumerableVertices)
        throw DomainError("subset enumeration limited to " + std::to_string(kMaxEnumerableVertices) + " variables");
}

bool by_size_then_mask(VertexSet a, VertexSet b) {
    int da = std::popcount(a), db = std::popcount(b);
    return da != db ? da < db : a < b;
}

/// Keeps the inclusion-minimal sets.
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), by_size_then_mask);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (auto s : sets)
        if (std::none_of(kept.begin(), kept.end(), [&](VertexSet k) { return (k & ~s) == 0; })) kept.push_back(s);
    return kept;
}

/// Maximal elements of a downward-closed family given by a membership test.
template <class IsFace>
std::vector<VertexSet> maximal_faces(int vertex_count, IsFace&& is_face) {
    require_enumerable(vertex_count);
    std::vector<VertexSet> out;
    VertexSet all = full_vertex_set(vertex_count);
    for (VertexSet s = 0;; ++s) {
        if (is_face(s)) {
            bool maximal = true;
            for (int v = 0; v < vertex_count && maximal; ++v) {
                VertexSet bit = VertexSet{1} << v;
                if (!(s & bit) && is_face(s | bit)) maximal = false;
            }
            if (maximal) out.push_back(s);
        }
        if (s == all) break;
    }
    return out;
}

/// Multiplies a truncated series by (1 - t)^power.
std::vector<mpz_class> times_one_minus_t(std::vector<mpz_class> series, int power, int truncation) {
    for (int k = 0; k < power; ++k)
        for (int d = truncation; d >= 1; --d) series[static_cast<std::size_t>(d)] -= series[static_cast<std::size_t>(d - 1)];
    return series;
}

mpz_class as_mpz(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

mpz_class choose(long a, long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return c;
}

} // namespace

SquarefreeMonomialIdeal::SquarefreeMonomialIdeal(int variable_count, std::vector<VertexSet> generators)
    : variable_count_(variable_count) {
    if (variable_count < 0 || variable_count > 64) throw DomainError("variable count must lie in 0..64");
    VertexSet all = full_vertex_set(variable_count);
    for (auto g : generators)
        if (g & ~all) throw DomainError("generator uses a variable outside the ring");
    generators_ = minimal_sets(std::move(generators));
}

bool SquarefreeMonomialIdeal::contains(VertexSet monomial) const {
    return std::any_of(generators_.begin(), generators_.end(), [&](VertexSet g) { return (g & ~monomial) == 0; });
}

SimplicialComplex complex_from_ideal(const SquarefreeMonomialIdeal& ideal) {
    if (ideal.is_unit()) return SimplicialComplex::void_complex(ideal.variable_count());
    return {ideal.variable_count(),
            maximal_faces(ideal.variable_count(), [&](VertexSet s) { return !ideal.contains(s); })};
}

SquarefreeMonomialIdeal ideal_from_complex(const SimplicialComplex& delta) {
    require_enumerable(delta.vertex_count());
    std::vector<VertexSet> nonfaces;
    VertexSet all = full_vertex_set(delta.vertex_count());
    for (VertexSet s = 0;; ++s) {
        if (!delta.contains(s)) {
            bool minimal = true;
            for (VertexSet rest = s; rest && minimal; rest &= rest - 1)
                if (!delta.contains(s & ~(rest & -rest))) minimal = false;
            if (minimal) nonfaces.push_back(s);
        }
        if (s == all) break;
    }
    return {delta.vertex_count(), std::move(nonfaces)};
}

SimplicialComplex alexander_dual(const SimplicialComplex& delta) {
    VertexSet all = full_vertex_set(delta.vertex_count());
    return {delta.vertex_count(),
            maximal_faces(delta.vertex_count(), [&](VertexSet s) { return !delta.contains(all & ~s); })};
}

PrimaryDecomposition primary_decomposition(const SquarefreeMonomialIdeal& ideal) {
    PrimaryDecomposition d;
    d.variable_count = ideal.variable_count();
    VertexSet all = full_vertex_set(ideal.variable_count());
    const auto complex = complex_from_ideal(ideal);
    for (auto f : complex.facets()) d.components.push_back(all & ~f);
    std::sort(d.components.begin(), d.components.end(), by_size_then_mask);
    return d;
}

bool decomposition_matches(const PrimaryDecomposition& decomposition, const SquarefreeMonomialIdeal& ideal) {
    if (decomposition.variable_count != ideal.variable_count()) return false;
    require_enumerable(ideal.variable_count());
    VertexSet all = full_vertex_set(ideal.variable_count());
    for (VertexSet u = 0;; ++u) {
        bool in_all = std::all_of(decomposition.components.begin(), decomposition.components.end(),
                                  [&](VertexSet c) { return (u & c) != 0; });
        if (in_all != ideal.contains(u)) return false;
        if (u == all) break;
    }
    return true;
}

SquarefreeMonomialIdeal monomialization(const SquarefreeMonomialIdeal& ideal) {
    return {ideal.variable_count(), primary_decomposition(ideal).components};
}

BettiTable hochster_betti_table(const SquarefreeMonomialIdeal& ideal, const HochsterOptions& options) {
    const int nu = ideal.variable_count();
    require_enumerable(nu);
    const int max_i = options.max_hom_degree < 0 ? nu : options.max_hom_degree;
    if (max_i > nu) throw DomainError("homological degree bound exceeds the variable count");
    auto primes = options.primes.empty() ? default_primes() : options.primes;
    auto delta = complex_from_ideal(ideal);

    // Enumerate sigma by size then mask; group by key when one is supplied.
    std::vector<VertexSet> sigmas(std::size_t{1} << nu);
    for (std::size_t s = 0; s < sigmas.size(); ++s) sigmas[s] = s;
    std::stable_sort(sigmas.begin(), sigmas.end(), by_size_then_mask);

    std::vector<std::size_t> class_of(sigmas.size());
    std::vector<VertexSet> representatives;
    if (options.symmetry_key) {
        std::map<std::pair<int, std::uint64_t>, std::size_t> seen;
        for (std::size_t k = 0; k < sigmas.size(); ++k) {
            auto key = std::make_pair(std::popcount(sigmas[k]), options.symmetry_key(sigmas[k]));
            auto [it, inserted] = seen.try_emplace(key, representatives.size());
            if (inserted) representatives.push_back(sigmas[k]);
            class_of[k] = it->second;
        }
    } else {
        representatives = sigmas;
        for (std::size_t k = 0; k < sigmas.size(); ++k) class_of[k] = k;
    }

    std::vector<CohomologyProfile> profiles(representatives.size());
    parallel_for(representatives.size(), options.jobs, [&](std::size_t k) {
        profiles[k] = reduced_cohomology_dims(induced_subcomplex(delta, representatives[k]), primes);
    });

    BettiTable table;
    for (std::size_t k = 0; k < sigmas.size(); ++k) {
        int size = std::popcount(sigmas[k]);
        for (const auto& [q, dim] : profiles[class_of[k]].dims) {
            int i = size - q - 1;
            if (i <= max_i) table.add(i, size, dim);
        }
    }
    return table;
}

std::vector<mpz_class> hilbert_series_from_f(const SimplicialComplex& delta, int truncation) {
    if (truncation < 0) throw DomainError("truncation degree must be nonnegative");
    std::vector<mpz_class> hf(static_cast<std::size_t>(truncation + 1), 0);
    if (delta.is_void()) return hf;
    auto f = f_vector(delta);
    hf[0] = 1;
    for (int d = 1; d <= truncation; ++d)
        for (std::size_t size = 1; size < f.counts.size(); ++size)
            hf[static_cast<std::size_t>(d)] += as_mpz(f.counts[size]) * choose(d - 1, static_cast<long>(size) - 1);
    return hf;
}

std::vector<mpz_class> hilbert_series_from_h(const SimplicialComplex& delta, int truncation) {
    if (truncation < 0) throw DomainError("truncation degree must be nonnegative");
    std::vector<mpz_class> hs(static_cast<std::size_t>(truncation + 1), 0);
    if (delta.is_void()) return hs;
    auto f = f_vector(delta);
    const int dim_plus_one = delta.dimension() + 1;
    // h-numerator sum_k f_{k-1} t^k (1-t)^(D-k).
    std::vector<mpz_class> h(static_cast<std::size_t>(dim_plus_one + 1), 0);
    for (int k = 0; k <= dim_plus_one; ++k) {
        mpz_class fk = as_mpz(f.counts[static_cast<std::size_t>(k)]);
        for (int m = 0; m <= dim_plus_one - k; ++m) {
            mpz_class term = fk * choose(dim_plus_one - k, m);
            if (m % 2) term = -term;
            h[static_cast<std::size_t>(k + m)] += term;
        }
    }
    for (int d = 0; d <= truncation; ++d)
        for (int k = 0; k <= std::min(d, dim_plus_one); ++k)
            hs[static_cast<std::size_t>(d)] += h[static_cast<std::size_t>(k)] * choose(d - k + dim_plus_one - 1, dim_plus_one - 1);
    if (dim_plus_one == 0) hs[0] = 1;
    return hs;
}

std::vector<mpz_class> hilbert_numerator(const std::vector<mpz_class>& series, int variable_count, int truncation) {
    std::vector<mpz_class> s(static_cast<std::size_t>(truncation + 1), 0);
    for (int d = 0; d <= truncation && d < static_cast<int>(series.size()); ++d) s[static_cast<std::size_t>(d)] = series[static_cast<std::size_t>(d)];
    if (static_cast<int>(series.size()) <= truncation) throw DomainError("series shorter than the truncation degree");
    return times_one_minus_t(std::move(s), variable_count, truncation);
}

std::vector<mpz_class> betti_numerator(const BettiTable& table, int truncation) {
    std::vector<mpz_class> out(static_cast<std::size_t>(truncation + 1), 0);
    for (const auto& [key, b] : table.entries()) {
        if (key.second > truncation) continue;
        mpz_class v = as_mpz(b);
        if (key.first % 2) out[static_cast<std::size_t>(key.second)] -= v;
        else out[static_cast<std::size_t>(key.second)] += v;
    }
    return out;
}

DualCheck regularity_pdim_dual(const SquarefreeMonomialIdeal& ideal, const HochsterOptions& options) {
    DualCheck check;
    if (ideal.is_unit()) check.regularity_of_ideal = 0;
    else if (!ideal.generators().empty()) check.regularity_of_ideal = hochster_betti_table(ideal, options).regularity() + 1;
    check.pdim_of_dual_quotient = hochster_betti_table(monomialization(ideal), options).projective_dimension();
    return check;
}

bool regularity_pdim_dual_check(const SquarefreeMonomialIdeal& ideal) { return regularity_pdim_dual(ideal).holds(); }

} // namespace permres
