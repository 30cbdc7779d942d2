#pragma once

#include <vector>

#include "permres/monomial.hpp"

namespace permres {

/// Lex or graded-lex order with an explicit variable priority
/// (priority[0] is the largest variable).
class MonomialOrder {
public:
    enum class Kind { Lex, GradedLex };

    MonomialOrder(Kind kind, std::vector<VarIndex> priority);

    static MonomialOrder lex(int variable_count);
    static MonomialOrder graded_lex(int variable_count);

    Kind kind() const { return kind_; }
    const std::vector<VarIndex>& priority() const { return priority_; }
    int variable_count() const { return static_cast<int>(priority_.size()); }

    /// Negative, zero or positive as a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.priority_ == b.priority_;
    }

private:
    Kind kind_;
    std::vector<VarIndex> priority_;
    std::vector<int> rank_of_;
};

/// Flattened index of x_{row,col} (1-based) in a 2 x n grid: (row-1)*n + (col-1).
inline VarIndex grid_variable(int row, int col, int n) {
    return static_cast<VarIndex>((row - 1) * n + (col - 1));
}

/// Lex order with x_{21} > ... > x_{2n} > x_{11} > ... > x_{1n}. Verifies on
/// construction that every subpermanent is led by its antidiagonal product.
MonomialOrder antidiagonal_order(int n);

/// True iff for all i > j the leading monomial of x_{1i}x_{2j} + x_{1j}x_{2i}
/// is x_{1i}x_{2j}.
bool has_antidiagonal_property(const MonomialOrder& order, int n);

/// Lex order with x_{11} > ... > x_{1n} > x_{21} > ... > x_{2n}; leads every
/// 2x2 minor with its diagonal product.
MonomialOrder diagonal_order(int n);

} // namespace permres
