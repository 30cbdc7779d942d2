#pragma once

#include "permres/betti_table.hpp"
#include "permres/bgg.hpp"
#include "permres/koszul.hpp"
#include "permres/quotient_ring.hpp"

namespace permres {

/// Rows computed by the oracles for the 2 x n families; row 4 is included so
/// that its vanishing is an output rather than an assumption.
inline constexpr int kFamilyMaxRow = 4;

GradedQuotientRing permanental_quotient(int n, int max_degree = kFamilyMaxRow + 1);
GradedQuotientRing permanental_initial_quotient(int n, int max_degree = kFamilyMaxRow + 1);
GradedQuotientRing determinantal_quotient(int n, int max_degree = kFamilyMaxRow + 1);

DualQuotient permanental_dual(int n, int max_degree = kFamilyMaxRow + 1);
DualQuotient permanental_initial_dual(int n, int max_degree = kFamilyMaxRow + 1);

/// Koszul and BGG tables of R/P_{2xn} over rows 0..kFamilyMaxRow.
BettiTable permanental_koszul_table(int n, const OracleOptions& options = {});
BettiTable permanental_bgg_table(int n, const OracleOptions& options = {});
BettiTable determinantal_koszul_table(int n, const OracleOptions& options = {});

/// Row 3 of the Hochster table of in(P_{2xn}) equals row 3 of the Koszul
/// table of R/P_{2xn}.
bool third_row_equality_check(int n, const OracleOptions& options = {});

/// Betti table of R/P_{2xn} is entrywise at most that of R/in(P_{2xn}).
bool semicontinuity_check(int n, const OracleOptions& options = {});

} // namespace permres
