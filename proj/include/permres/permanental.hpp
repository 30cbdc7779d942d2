#pragma once

#include <vector>

#include <gmpxx.h>

#include "permres/betti_table.hpp"
#include "permres/polynomial.hpp"
#include "permres/simplicial.hpp"
#include "permres/stanley_reisner.hpp"

namespace permres {

struct PermanentalFamily {
    int n = 0;
    std::vector<Polynomial> generators; // p_ij = x_{1i}x_{2j} + x_{1j}x_{2i}, i < j
};

PermanentalFamily permanental_generators(int n);
/// The 2x2 minors x_{1i}x_{2j} - x_{1j}x_{2i}, i < j.
std::vector<Polynomial> determinantal_generators(int n);

/// C(a, b), zero when b < 0 or b > a (and for a < 0).
mpz_class binomial(long a, long b);

/// The entry b_{i,j} of R/P_{2xn} from the closed formulas (n >= 3).
mpz_class closed_form_entry(int n, int i, int j);
BettiTable closed_form_betti(int n);

/// sum_{w=3}^{floor((k+3)/2)} 2^{k+3-2w} C(n,w) C(n-w,k+3-2w) C(w-1,2).
mpz_class third_row_initial(int n, int k);
/// 2C(n,k+2) - C(2n,k+2) + C(n+1,2)C(2n-2,k) - 2C(n,2)C(2n-3,k-1).
mpz_class second_row_difference(int n, int k);

/// f-vector of the complex of in(P_{2xn}) from the closed formulas (n >= 3).
FVector f_vector_closed_form(int n);
/// Coefficients of 2(t+1)^n - t^n + C(n+1,2) t^{n-2} + 2C(n,2) t^{n-3}, by
/// increasing power of t; the coefficient of t^{n-k} is f_{k-1}.
std::vector<mpz_class> f_polynomial(int n);

/// Two (n-1)-simplices on the rows plus the triangles {x_{1i},x_{2i},x_{2j}}
/// and {x_{1i},x_{1j},x_{2j}}, i < j.
SimplicialComplex delta_complex(int n);

/// in(P_{2xn}) read off the three Groebner families.
SquarefreeMonomialIdeal permanental_initial_ideal(int n);

/// Isomorphism invariant of Delta|_sigma for the complex of in(P_{2xn}):
/// the sequence, over occupied columns, of which rows sigma meets there.
SubsetKey column_pattern_key(int n);

/// Hochster table of in(P_{2xn}) with sigma grouped by column_pattern_key.
BettiTable permanental_hochster_table(int n, HochsterOptions options = {});

} // namespace permres
