#pragma once

// Randomised property suites shared by the unit tests and the acceptance
// binary. Each returns the number of cases run and the first failure seen.

#include <string>

#include "permres/bgg.hpp"
#include "permres/grading.hpp"
#include "permres/groebner.hpp"
#include "permres/io.hpp"
#include "permres/koszul.hpp"
#include "permres/quotient_ring.hpp"
#include "permres/stanley_reisner.hpp"
#include "support.hpp"

namespace permres::test {

struct PropertyResult {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }
    bool ok() const { return failures == 0; }
};

inline std::string describe(const SquarefreeMonomialIdeal& ideal) {
    return ideal_to_json({VariableLayout::generic(ideal.variable_count()), monomial_generators(ideal)});
}

inline std::string describe(const SimplicialComplex& delta) { return complex_to_json(delta); }

inline GradedQuotientRing monomial_quotient(const SquarefreeMonomialIdeal& ideal, int max_degree) {
    int nu = ideal.variable_count();
    return GradedQuotientRing(GeneratingSet(monomial_generators(ideal), MonomialOrder::lex(nu)), nu, max_degree,
                              Grading::fine(nu));
}

inline PropertyResult alexander_dual_involution(int cases, int max_vertices, std::uint64_t seed) {
    Rng rng(seed);
    PropertyResult r;
    for (int k = 0; k < cases; ++k) {
        auto delta = random_complex(rng, max_vertices);
        r.record(alexander_dual(alexander_dual(delta)) == delta, describe(delta));
    }
    return r;
}

/// Monomialization from the primary components computed here, by scanning
/// for maximal faces, against the Stanley-Reisner ideal of the Alexander dual.
inline PropertyResult monomialization_is_dual_ideal(int cases, int max_vertices, std::uint64_t seed) {
    Rng rng(seed);
    PropertyResult r;
    for (int k = 0; k < cases; ++k) {
        auto ideal = random_ideal(rng, max_vertices);
        auto faces = faces_by_scan(ideal);
        VertexSet all = (VertexSet{1} << ideal.variable_count()) - 1;
        std::vector<VertexSet> components;
        for (auto f : faces) {
            bool maximal = true;
            for (auto g : faces)
                if (g != f && (f & g) == f) maximal = false;
            if (maximal) components.push_back(all & ~f);
        }
        SquarefreeMonomialIdeal by_components(ideal.variable_count(), components);
        auto dual = ideal_from_complex(alexander_dual(complex_from_ideal(ideal)));
        r.record(by_components == dual && monomialization(ideal) == dual &&
                     decomposition_matches(primary_decomposition(ideal), ideal),
                 describe(ideal));
    }
    return r;
}

inline PropertyResult hochster_matches_koszul(int cases, int max_vertices, std::uint64_t seed) {
    Rng rng(seed);
    PropertyResult r;
    for (int k = 0; k < cases; ++k) {
        auto ideal = random_ideal(rng, max_vertices);
        int nu = ideal.variable_count();
        int rows = std::max(nu - 1, 1);
        auto hochster = hochster_betti_table(ideal);
        auto koszul = koszul_tor_betti(monomial_quotient(ideal, rows + 1), nu, nu, {}, rows);
        r.record(hochster == koszul, describe(ideal) + " " + describe_difference(hochster, koszul));
    }
    return r;
}

/// Reduced Euler characteristic from cohomology equals the alternating face
/// count, and the Betti numbers from Hochster's formula give the numerator of
/// the Hilbert series computed from the f-vector.
inline PropertyResult euler_characteristic_consistency(int cases, int max_vertices, std::uint64_t seed) {
    Rng rng(seed);
    PropertyResult r;
    for (int k = 0; k < cases; ++k) {
        auto ideal = random_ideal(rng, max_vertices);
        auto delta = complex_from_ideal(ideal);
        auto counts = size_counts(faces_by_scan(ideal));
        long long alternating = 0;
        for (std::size_t s = 0; s < counts.size(); ++s)
            alternating += (s % 2 ? 1 : -1) * static_cast<long long>(counts[s]);
        bool ok = reduced_cohomology_dims(delta).euler_characteristic() == alternating;
        int nu = ideal.variable_count();
        int trunc = nu + 2;
        auto numerator = hilbert_numerator(hilbert_series_from_f(delta, trunc), nu, trunc);
        ok = ok && numerator == betti_numerator(hochster_betti_table(ideal), trunc);
        r.record(ok, describe(ideal));
    }
    return r;
}

/// Coboundaries of random complexes, Koszul pieces of random monomial
/// quotients and BGG pieces of random monomial duals all square to zero.
inline PropertyResult differentials_square_to_zero(int cases, int max_vertices, std::uint64_t seed) {
    Rng rng(seed);
    PropertyResult r;
    for (int k = 0; k < cases; ++k) {
        auto delta = random_complex(rng, max_vertices);
        bool ok = true;
        for (int q = -1; q + 1 <= delta.dimension(); ++q)
            ok = ok && product_vanishes(coboundary_matrix(delta, q), coboundary_matrix(delta, q + 1));

        auto ideal = random_ideal(rng, std::min(max_vertices, 5));
        int nu = ideal.variable_count();
        auto q = monomial_quotient(ideal, 3);
        for (int i = 1; i <= nu; ++i)
            for (int j = i; j <= i + 2; ++j) {
                auto piece = koszul_piece(q, i, j);
                ok = ok && product_vanishes(piece.incoming, piece.outgoing);
            }
        DualQuotient dual(monomial_generators(ideal), nu, 3, Grading::fine(nu));
        for (int ell = 0; ell <= 2; ++ell)
            for (int s = ell; s <= ell + nu - 1; ++s) {
                auto piece = bgg_piece(dual, ell, s);
                ok = ok && product_vanishes(piece.incoming, piece.ambient);
            }
        r.record(ok, describe(delta) + " / " + describe(ideal));
    }
    return r;
}

/// Ranks of coboundary and Koszul matrices agree over 32003, 1000003 and Q.
inline PropertyResult two_prime_rank_agreement(int cases, int max_vertices, std::uint64_t seed) {
    Rng rng(seed);
    PropertyResult r;
    const PrimeField p(32003), p2(1000003);
    auto agree = [&](const RationalMatrix& m) {
        auto a = rank(reduce_matrix(m, p), p);
        return a == rank(reduce_matrix(m, p2), p2) && a == rank_bareiss(m);
    };
    for (int k = 0; k < cases; ++k) {
        auto delta = random_complex(rng, max_vertices);
        bool ok = true;
        for (int q = -1; q <= delta.dimension(); ++q) ok = ok && agree(coboundary_matrix(delta, q));
        auto ideal = random_ideal(rng, std::min(max_vertices, 5));
        auto quotient = monomial_quotient(ideal, 3);
        for (int i = 1; i <= 3; ++i) ok = ok && agree(koszul_piece(quotient, i, i + 1).outgoing);
        r.record(ok, describe(delta) + " / " + describe(ideal));
    }
    return r;
}

} // namespace permres::test
