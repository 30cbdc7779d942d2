#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "permres/monomial_order.hpp"
#include "permres/polynomial.hpp"
#include "permres/wedge.hpp"

namespace permres {

/// Bases of (P_{2xn})_k^perp and in(P_{2xn})_k^perp in the dual variables
/// y_v (same indexing as x_v): the monomials T_k followed by the binding
/// elements and, respectively, their initial monomials.
struct PerpBasis {
    int k = 0;
    std::vector<Monomial> monomials;      // T_k
    std::vector<Polynomial> binding;      // sorted by (i, j, list position)
    std::vector<Monomial> initial;        // initial monomial of each binding element

    std::size_t size() const { return monomials.size() + binding.size(); }
    /// Element `index` of the full basis, respectively of the initial basis.
    Polynomial full_element(std::size_t index) const;
    Polynomial initial_element(std::size_t index) const;
};

/// y_{1i}y_{2j} - y_{2i}y_{1j}.
Polynomial binding_quadric(int n, int i, int j);

/// Perp bases for k = 0..5 with the basis and initial-term checks applied
/// (InternalError on failure). Requires 2 <= n <= 5.
class PerpComplexes {
public:
    explicit PerpComplexes(int n);

    int n() const { return n_; }
    const MonomialOrder& order() const { return order_; }
    const PerpBasis& basis(int k) const { return bases_.at(static_cast<std::size_t>(k)); }

    /// Coordinates of a perp element in the full basis (InternalError if the
    /// element is not in the span).
    std::vector<mpq_class> full_coordinates(int k, const Polynomial& phi) const;
    std::vector<mpq_class> initial_coordinates(int k, const Polynomial& phi) const;

    /// iota_in^{-1} o iota and its inverse, applied to the y-part of each wedge.
    ExteriorElement full_to_initial(int k, const ExteriorElement& x) const;
    ExteriorElement initial_to_full(int k, const ExteriorElement& x) const;

private:
    int n_;
    MonomialOrder order_;
    std::vector<PerpBasis> bases_;
};

struct AnticommutativityReport {
    bool ok = true;
    std::vector<int> failing_levels; // k with delta_in_k delta_full_{k+1} != -delta_full_k delta_in_{k+1}
};

/// Checks delta_in_k o delta_full_{k+1} = -delta_full_k o delta_in_{k+1} on E (x) V
/// for k = 0..4, one pair of variables at a time.
AnticommutativityReport anticommutativity_report(int n);
bool anticommutativity_check(int n);

/// The eight-term elements phi_ijk (initial side) and psi_ijk (full side), 1-based columns.
ExteriorElement phi_element(int n, int i, int j, int k);
ExteriorElement psi_element(int n, int i, int j, int k);

struct PsiReport {
    bool ok = true;
    std::size_t triples = 0;
    std::string failure;
};

/// For every i < j < k: psi is the basis transfer of phi, phi is a cycle and
/// not a boundary of the initial complex, and the differential kills psi.
PsiReport psi_vanishing_report(int n);
bool psi_vanishing_check(int n);

} // namespace permres
