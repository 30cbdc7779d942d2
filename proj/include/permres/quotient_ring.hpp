#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "permres/grading.hpp"
#include "permres/groebner.hpp"

namespace permres {

/// R/I truncated at a maximal degree, presented by standard monomials.
/// Multiplication by each variable is tabulated on construction, so the
/// object is immutable afterwards and safe to share between threads.
class GradedQuotientRing {
public:
    /// Sparse vector over the standard monomials of one degree.
    using Vector = std::vector<std::pair<std::uint32_t, mpq_class>>;

    /// The generating set must be a Groebner basis (checked with the
    /// Buchberger criterion; DomainError otherwise).
    GradedQuotientRing(const GeneratingSet& groebner_basis, int variable_count, int max_degree, Grading grading);

    int variable_count() const { return variable_count_; }
    int max_degree() const { return max_degree_; }
    const Grading& grading() const { return grading_; }
    const InitialIdeal& initial() const { return initial_; }

    const std::vector<Monomial>& basis(int degree) const { return basis_.at(static_cast<std::size_t>(degree)); }
    const MultiDegree& multidegree(int degree, std::size_t index) const {
        return multidegrees_.at(static_cast<std::size_t>(degree))[index];
    }
    std::size_t dimension(int degree) const { return basis(degree).size(); }

    /// Normal form of x_v * basis(degree)[index], in the basis of degree + 1.
    /// Requires degree < max_degree.
    const Vector& multiply(int degree, std::size_t index, VarIndex v) const;

    std::uint32_t index_of(int degree, const Monomial& m) const;

private:
    GeneratingSet gb_;
    InitialIdeal initial_;
    int variable_count_;
    int max_degree_;
    Grading grading_;
    std::vector<std::vector<Monomial>> basis_;
    std::vector<std::vector<MultiDegree>> multidegrees_;
    std::vector<std::unordered_map<Monomial, std::uint32_t, MonomialHash>> index_;
    std::vector<std::vector<Vector>> products_; // [degree][index * nu + v]
};

} // namespace permres
