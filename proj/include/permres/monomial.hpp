#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace permres {

using VarIndex = std::uint16_t;
using Exponent = std::uint16_t;

/// A monomial stored as its nonzero exponents, sorted by variable index.
class Monomial {
public:
    struct Factor {
        VarIndex var;
        Exponent exp;
        friend auto operator<=>(const Factor&, const Factor&) = default;
    };

    Monomial() = default;

    static Monomial variable(VarIndex v, Exponent e = 1);
    /// Builds from a dense exponent vector; zero entries are dropped.
    static Monomial from_exponents(std::span<const int> exponents);
    /// Squarefree monomial whose support is the given bit-mask.
    static Monomial from_mask(std::uint64_t mask);

    const std::vector<Factor>& factors() const { return factors_; }
    Exponent exponent(VarIndex v) const;
    int degree() const { return degree_; }
    bool is_one() const { return factors_.empty(); }
    bool is_squarefree() const;
    /// Bit-mask of the support; requires all variables < 64.
    std::uint64_t support_mask() const;
    std::vector<int> dense(int variable_count) const;

    bool divides(const Monomial& other) const;
    /// Quotient other / *this when it exists.
    std::optional<Monomial> quotient_of(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    /// Divides by one copy of v; empty when v does not occur.
    std::optional<Monomial> contract(VarIndex v) const;

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Structural order (not a monomial order); used for container keys.
    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        return a.factors_ <=> b.factors_;
    }

    std::size_t hash() const;

private:
    std::vector<Factor> factors_;
    int degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of total degree d in the given number of variables, in
/// lexicographic order of their dense exponent vectors (x_0 largest).
std::vector<Monomial> monomials_of_degree(int variable_count, int degree);

} // namespace permres
