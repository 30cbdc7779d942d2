#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "permres/monomial.hpp"

namespace permres {

/// Basis monomial e_{i1} ^ ... ^ e_{ik} of the exterior algebra, i1 < ... < ik.
class WedgeMonomial {
public:
    constexpr WedgeMonomial() = default;
    constexpr explicit WedgeMonomial(std::uint64_t mask) : mask_(mask) {}
    /// From an arbitrary index list; the list must be strictly increasing.
    static WedgeMonomial from_indices(const std::vector<int>& increasing);

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr int degree() const { return std::popcount(mask_); }
    constexpr bool contains(int v) const { return (mask_ >> v) & 1u; }
    std::vector<int> indices() const;

    friend constexpr auto operator<=>(const WedgeMonomial&, const WedgeMonomial&) = default;

private:
    std::uint64_t mask_ = 0;
};

struct WedgeProduct {
    int sign; // +1, -1, or 0 when the factors share a generator
    WedgeMonomial value;
};

/// a ^ b rewritten in increasing order, with the sign of the merging permutation.
WedgeProduct wedge_multiply(WedgeMonomial a, WedgeMonomial b);

/// Masks of all wedge monomials of degree a in nu generators, increasing.
std::vector<std::uint64_t> wedges_of_degree(int nu, int a);

/// Sign (-1)^(number of elements of s below v); the Koszul sign of removing
/// or appending-then-sorting v.
inline int position_sign(WedgeMonomial s, int v) {
    std::uint64_t below = s.mask() & ((std::uint64_t{1} << v) - 1);
    return (std::popcount(below) % 2) ? -1 : 1;
}

/// An element of E (x) R^*: formal sum of wedge (x) y-monomial with rational
/// coefficients. The y-monomials reuse Monomial (y_v is dual to x_v).
class ExteriorElement {
public:
    using Key = std::pair<WedgeMonomial, Monomial>;

    void add_term(WedgeMonomial e, const Monomial& y, const mpq_class& c);
    /// Adds c * (e_{i1} e_{i2} ... in the given, possibly unsorted, order) (x) y.
    void add_ordered(const std::vector<int>& wedge_factors, const Monomial& y, const mpq_class& c);

    const std::map<Key, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ExteriorElement& operator+=(const ExteriorElement& o);
    ExteriorElement& operator-=(const ExteriorElement& o);
    friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
    friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
    ExteriorElement scaled(const mpq_class& c) const;

    friend bool operator==(const ExteriorElement&, const ExteriorElement&) = default;

private:
    std::map<Key, mpq_class> terms_;
};

/// Dual Koszul (BGG) differential e (x) phi -> sum_v e.e_v (x) x_v.phi, where
/// x_v acts on y-monomials by contraction (y^a -> y^(a - e_v), or 0).
ExteriorElement dual_koszul_differential(const ExteriorElement& element, int variable_count);

} // namespace permres
