#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permres/monomial_order.hpp"
#include "permres/polynomial.hpp"

namespace permres {

/// Generators of a homogeneous ideal together with the order they are read in.
class GeneratingSet {
public:
    /// Throws DomainError on zero or inhomogeneous generators.
    GeneratingSet(std::vector<Polynomial> generators, MonomialOrder order);

    const std::vector<Polynomial>& generators() const { return generators_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Monomial>& leading_monomials() const { return leading_; }
    std::size_t size() const { return generators_.size(); }

private:
    std::vector<Polynomial> generators_;
    MonomialOrder order_;
    std::vector<Monomial> leading_;
};

/// Minimal monomial generators of an initial ideal (none divides another),
/// sorted descending in the recorded order.
class InitialIdeal {
public:
    InitialIdeal(std::vector<Monomial> monomials, MonomialOrder order);

    const std::vector<Monomial>& generators() const { return generators_; }
    const MonomialOrder& order() const { return order_; }
    bool contains(const Monomial& m) const;

private:
    std::vector<Monomial> generators_;
    MonomialOrder order_;
};

/// Remainder of full multivariate division; always reduces by the earliest
/// generator (in list order) whose leading monomial divides the current term.
Polynomial normal_form(const Polynomial& f, const GeneratingSet& g);

/// x_{1i}x_{2j} + x_{1j}x_{2i} (i > j), x_{1i}x_{2j}x_{2k} and
/// x_{1i}x_{1j}x_{2k} (i < j < k), under antidiagonal_order(n).
GeneratingSet permanental_gb(int n);

/// The 2x2 minors x_{1i}x_{2j} - x_{1j}x_{2i} (i < j) under diagonal_order(n).
GeneratingSet determinantal_gb(int n);

struct GroebnerReport {
    bool spairs_reduce_to_zero = true;
    bool reduced = true;
    std::size_t pairs_checked = 0;
    std::size_t pairs_skipped_coprime = 0;
    std::string failure; // first failing pair or reducedness violation

    bool ok() const { return spairs_reduce_to_zero && reduced; }
};

/// Buchberger's criterion over all pairs (coprime leading monomials skipped)
/// plus the reducedness conditions.
GroebnerReport check_groebner(const GeneratingSet& g);
bool verify_groebner(const GeneratingSet& g);

/// Buchberger criterion only; for generating sets that are Groebner bases but
/// not reduced ones.
bool is_groebner_basis(const GeneratingSet& g);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

InitialIdeal initial_ideal(const GeneratingSet& g);

/// Degree-d monomials in nu variables outside the initial ideal, sorted
/// descending in its order.
std::vector<Monomial> standard_monomials(const InitialIdeal& ideal, int degree, int variable_count);

/// dim (R/I)_d, counted as standard monomials.
std::uint64_t hilbert_function(const InitialIdeal& ideal, int degree, int variable_count);

/// dim I_d = C(nu+d-1, d) - dim (R/I)_d.
std::uint64_t ideal_hilbert_function(const InitialIdeal& ideal, int degree, int variable_count);

std::uint64_t monomial_count(int variable_count, int degree);

} // namespace permres
