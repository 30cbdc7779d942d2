#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "permres/betti_table.hpp"
#include "permres/grading.hpp"
#include "permres/koszul.hpp"
#include "permres/polynomial.hpp"
#include "permres/wedge.hpp"

namespace permres {

/// The graded dual N^vee of N = R/I up to a maximal degree: in each degree
/// d, a basis of I_d^perp inside R_d^* (y-monomials, monomial pairing),
/// split by multidegree. Computed from the generators alone, without a
/// Groebner basis.
class DualQuotient {
public:
    /// A perp element: sparse combination of degree-d y-monomials.
    using Functional = std::vector<std::pair<Monomial, mpq_class>>;

    DualQuotient(const std::vector<Polynomial>& generators, int variable_count, int max_degree, Grading grading);

    int variable_count() const { return variable_count_; }
    int max_degree() const { return max_degree_; }
    const Grading& grading() const { return grading_; }

    /// Basis of I_d^perp, grouped by multidegree.
    const std::map<MultiDegree, std::vector<Functional>>& perp(int degree) const {
        return perp_.at(static_cast<std::size_t>(degree));
    }
    std::size_t dimension(int degree) const;

private:
    int variable_count_;
    int max_degree_;
    Grading grading_;
    std::vector<std::map<MultiDegree, std::vector<Functional>>> perp_;
};

/// The BGG complex around Lambda^{s-l} (x) N_l^vee. Matrices have one row
/// per source element; columns index the ambient Lambda (x) R^* monomials.
struct BggPiece {
    int ell = 0;
    int s = 0;
    std::size_t middle_dimension = 0;
    RationalMatrix incoming; // Lambda^{s-l-1} (x) N_{l+1}^vee -> Lambda^{s-l} (x) R_l^*
    RationalMatrix outgoing; // Lambda^{s-l} (x) N_l^vee -> Lambda^{s-l+1} (x) R_{l-1}^*
    /// The differential on the ambient Lambda^{s-l} (x) R_l^*, rows matching
    /// the columns of `incoming`; incoming * ambient must vanish.
    RationalMatrix ambient;
};

BggPiece bgg_piece(const DualQuotient& dual, int ell, int s);

/// dim H_l of the BGG complex in total degree s; equals b_{s-l, s} of N.
std::size_t bgg_homology_dim(const DualQuotient& dual, int ell, int s, const OracleOptions& options = {});

/// b_{i,j} = H_{j-i} in degree j for rows j - i <= max_row (at most
/// dual.max_degree() - 1) and i <= max_i.
BettiTable bgg_betti_table(const DualQuotient& dual, int max_i, int max_row, const OracleOptions& options = {});

/// True iff x (homogeneous, living in Lambda^a (x) R_l^*) is the BGG image of
/// an element of Lambda^{a-1} (x) N_{l+1}^vee.
bool is_bgg_boundary(const DualQuotient& dual, const ExteriorElement& x, int ell, const OracleOptions& options = {});

} // namespace permres
