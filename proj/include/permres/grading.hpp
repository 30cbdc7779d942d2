#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permres/monomial.hpp"
#include "permres/polynomial.hpp"
#include "permres/wedge.hpp"

namespace permres {

using MultiDegree = std::vector<int>;

/// A Z^g grading of the polynomial ring given by one weight vector per
/// variable. Every grading used here refines the standard total degree.
class Grading {
public:
    Grading(std::string name, std::vector<MultiDegree> weights);

    /// Total degree only.
    static Grading standard(int variable_count);
    /// One coordinate per variable.
    static Grading fine(int variable_count);
    /// For a 2 x n grid: one coordinate per column plus the row-2 count.
    static Grading grid(int n);

    const std::string& name() const { return name_; }
    int variable_count() const { return static_cast<int>(weights_.size()); }
    int dimension() const { return dimension_; }

    MultiDegree degree(const Monomial& m) const;
    MultiDegree degree(WedgeMonomial e) const;
    MultiDegree zero() const { return MultiDegree(static_cast<std::size_t>(dimension_), 0); }
    void accumulate(MultiDegree& into, const MultiDegree& d) const;

    template <ExactField F>
    bool is_homogeneous(const BasicPolynomial<F>& f) const {
        std::optional<MultiDegree> first;
        for (const auto& [m, c] : f.terms()) {
            auto d = degree(m);
            if (!first) first = std::move(d);
            else if (*first != d) return false;
        }
        return true;
    }

private:
    std::string name_;
    std::vector<MultiDegree> weights_;
    int dimension_;
};

/// Finest of {fine, grid (when a column count is given), standard} for which
/// every generator is homogeneous.
Grading choose_grading(const std::vector<Polynomial>& generators, int variable_count,
                       std::optional<int> grid_columns = std::nullopt);

} // namespace permres
