#pragma once

#include <functional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "permres/betti_table.hpp"
#include "permres/field.hpp"
#include "permres/simplicial.hpp"

namespace permres {

/// Squarefree monomial ideal given by minimal generators (vertex bit-masks).
/// The unit ideal is represented by the single generator 0.
class SquarefreeMonomialIdeal {
public:
    SquarefreeMonomialIdeal(int variable_count, std::vector<VertexSet> generators);

    int variable_count() const { return variable_count_; }
    const std::vector<VertexSet>& generators() const { return generators_; }
    bool is_unit() const { return generators_.size() == 1 && generators_.front() == 0; }
    /// True iff the squarefree monomial with this support lies in the ideal.
    bool contains(VertexSet monomial) const;

    friend bool operator==(const SquarefreeMonomialIdeal&, const SquarefreeMonomialIdeal&) = default;

private:
    int variable_count_;
    std::vector<VertexSet> generators_;
};

/// Each component is the generating variable set of a prime <x_i : i in S>.
struct PrimaryDecomposition {
    int variable_count = 0;
    std::vector<VertexSet> components;
    friend bool operator==(const PrimaryDecomposition&, const PrimaryDecomposition&) = default;
};

/// Faces are the vertex sets whose monomial avoids the ideal.
SimplicialComplex complex_from_ideal(const SquarefreeMonomialIdeal& ideal);
/// Minimal non-faces.
SquarefreeMonomialIdeal ideal_from_complex(const SimplicialComplex& delta);

/// Faces are complements of non-faces of delta.
SimplicialComplex alexander_dual(const SimplicialComplex& delta);

/// Components are the complements of the facets of complex_from_ideal(ideal).
PrimaryDecomposition primary_decomposition(const SquarefreeMonomialIdeal& ideal);

/// Membership test of every squarefree monomial: intersection of the
/// component primes equals the ideal.
bool decomposition_matches(const PrimaryDecomposition& decomposition, const SquarefreeMonomialIdeal& ideal);

/// Products of the variables of each primary component, minimalised.
SquarefreeMonomialIdeal monomialization(const SquarefreeMonomialIdeal& ideal);

/// Maps a squarefree multidegree to a key such that equal keys give
/// isomorphic induced subcomplexes.
using SubsetKey = std::function<std::uint64_t(VertexSet)>;

struct HochsterOptions {
    int max_hom_degree = -1;          // -1: up to the variable count
    std::vector<PrimeField> primes;   // empty: default_primes()
    int jobs = 1;
    SubsetKey symmetry_key;           // optional grouping of sigma
};

/// b_{i,j} = sum over |sigma| = j of dim H~^{j-i-1}(delta|_sigma), for R/I.
BettiTable hochster_betti_table(const SquarefreeMonomialIdeal& ideal, const HochsterOptions& options = {});

/// HF(d) for d = 0..truncation via sum over faces F of C(d-1, |F|-1).
std::vector<mpz_class> hilbert_series_from_f(const SimplicialComplex& delta, int truncation);

/// Same coefficients via the h-polynomial sum f_{k-1} t^k (1-t)^(D-k)
/// expanded against 1/(1-t)^D, where D = dim(delta) + 1.
std::vector<mpz_class> hilbert_series_from_h(const SimplicialComplex& delta, int truncation);

/// Coefficients of (1-t)^nu * HS(t) truncated at the given degree.
std::vector<mpz_class> hilbert_numerator(const std::vector<mpz_class>& series, int variable_count, int truncation);

/// Coefficients of sum (-1)^i b_{i,j} t^j truncated at the given degree.
std::vector<mpz_class> betti_numerator(const BettiTable& table, int truncation);

struct DualCheck {
    int regularity_of_ideal = -1;           // reg(I) = reg(R/I) + 1
    int pdim_of_dual_quotient = -1;         // pdim(R/I_dual)
    bool holds() const { return regularity_of_ideal == pdim_of_dual_quotient; }
};

DualCheck regularity_pdim_dual(const SquarefreeMonomialIdeal& ideal, const HochsterOptions& options = {});
bool regularity_pdim_dual_check(const SquarefreeMonomialIdeal& ideal);

} // namespace permres
