#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "permres/linalg.hpp"
#include "permres/simplicial.hpp"
#include "permres/stanley_reisner.hpp"

namespace permres::test {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// A random family of nonempty subsets of {0..nu-1}.
inline std::vector<VertexSet> random_sets(Rng& rng, int nu, int max_count, int max_size) {
    std::vector<VertexSet> out;
    int count = uniform(rng, 1, max_count);
    for (int k = 0; k < count; ++k) {
        VertexSet s = 0;
        int size = uniform(rng, 1, std::min(max_size, nu));
        while (std::popcount(s) < size) s |= VertexSet{1} << uniform(rng, 0, nu - 1);
        out.push_back(s);
    }
    return out;
}

inline SquarefreeMonomialIdeal random_ideal(Rng& rng, int max_vertices) {
    int nu = uniform(rng, 1, max_vertices);
    return SquarefreeMonomialIdeal(nu, random_sets(rng, nu, 6, 4));
}

inline SimplicialComplex random_complex(Rng& rng, int max_vertices) {
    int nu = uniform(rng, 1, max_vertices);
    return SimplicialComplex(nu, random_sets(rng, nu, 5, nu));
}

/// Faces of the Stanley-Reisner complex by scanning every subset.
inline std::vector<VertexSet> faces_by_scan(const SquarefreeMonomialIdeal& ideal) {
    std::vector<VertexSet> out;
    for (VertexSet s = 0; s < (VertexSet{1} << ideal.variable_count()); ++s) {
        bool face = true;
        for (auto g : ideal.generators())
            if ((g & s) == g) face = false;
        if (face) out.push_back(s);
    }
    return out;
}

/// counts[k] = number of faces with k vertices.
inline std::vector<std::uint64_t> size_counts(const std::vector<VertexSet>& faces) {
    std::vector<std::uint64_t> counts;
    for (auto f : faces) {
        auto k = static_cast<std::size_t>(std::popcount(f));
        if (counts.size() <= k) counts.resize(k + 1, 0);
        ++counts[k];
    }
    return counts;
}

/// True iff a * b is the zero matrix (row convention: a is applied first).
inline bool product_vanishes(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols != b.rows) return false;
    for (const auto& row : a.data) {
        std::map<std::uint32_t, mpq_class> acc;
        for (const auto& [k, v] : row)
            for (const auto& [c, w] : b.data[k]) acc[c] += v * w;
        for (const auto& [c, v] : acc)
            if (sgn(v) != 0) return false;
    }
    return true;
}

inline mpz_class choose(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

} // namespace permres::test
