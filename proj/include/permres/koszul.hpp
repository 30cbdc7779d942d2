#pragma once

#include <vector>

#include "permres/betti_table.hpp"
#include "permres/field.hpp"
#include "permres/linalg.hpp"
#include "permres/quotient_ring.hpp"

namespace permres {

struct OracleOptions {
    std::vector<PrimeField> primes; // empty: default_primes()
    int jobs = 1;
};

/// The graded piece Lambda^{i+1} (x) Q_{j-i-1} -> Lambda^i (x) Q_{j-i} -> Lambda^{i-1} (x) Q_{j-i+1}
/// of the Koszul complex. Matrices have one row per source basis element.
struct KoszulPiece {
    int i = 0;
    int j = 0;
    std::size_t middle_dimension = 0;
    RationalMatrix incoming;
    RationalMatrix outgoing;
};

/// Whole graded piece (all multidegrees), in the bases ordered by
/// (wedge mask, standard monomial index).
KoszulPiece koszul_piece(const GradedQuotientRing& q, int i, int j);

/// dim Tor_i(Q, K)_j from the Koszul complex, one multigraded block at a time.
std::size_t koszul_betti(const GradedQuotientRing& q, int i, int j, const OracleOptions& options = {});

/// b_{i,j} for 0 <= i <= max_i and i <= j <= min(max_j, i + max_row), where
/// max_row defaults to q.max_degree() - 1.
BettiTable koszul_tor_betti(const GradedQuotientRing& q, int max_i, int max_j, const OracleOptions& options = {},
                            int max_row = -1);

} // namespace permres
