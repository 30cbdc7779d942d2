#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "permres/errors.hpp"

namespace permres {

/// Field descriptors. Elements are plain values; all arithmetic goes through
/// the descriptor so that algorithms can be written once for GF(p) and Q.
template <class F>
concept ExactField = requires(const F& f, const typename F::Element& a, const typename F::Element& b,
                              const mpq_class& q) {
    { f.zero() } -> std::convertible_to<typename F::Element>;
    { f.one() } -> std::convertible_to<typename F::Element>;
    { f.add(a, b) } -> std::convertible_to<typename F::Element>;
    { f.sub(a, b) } -> std::convertible_to<typename F::Element>;
    { f.mul(a, b) } -> std::convertible_to<typename F::Element>;
    { f.neg(a) } -> std::convertible_to<typename F::Element>;
    { f.inv(a) } -> std::convertible_to<typename F::Element>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.from_rational(q) } -> std::convertible_to<typename F::Element>;
};

bool is_prime(std::uint64_t p);

class PrimeField {
public:
    using Element = std::uint32_t;

    /// Throws DomainError unless p is an odd prime below 2^31.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element add(Element a, Element b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Element inv(Element a) const;
    bool is_zero(Element a) const { return a == 0; }
    bool equal(Element a, Element b) const { return a == b; }

    Element from_int(long long v) const;
    Element from_integer(const mpz_class& v) const;
    /// Throws BadPrimeError when p divides the denominator.
    Element from_rational(const mpq_class& q) const;

    std::string to_string(Element a) const { return std::to_string(a); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

class RationalField {
public:
    using Element = mpq_class;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const;
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_int(long long v) const { return mpq_class(mpz_class(std::to_string(v))); }
    Element from_integer(const mpz_class& v) const { return mpq_class(v); }
    Element from_rational(const mpq_class& q) const { return q; }

    std::string to_string(const Element& a) const { return a.get_str(); }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr std::uint32_t kVerificationPrime = 1000003;

/// Default primes, overridable by PERMRES_PRIMES="p1,p2".
std::vector<PrimeField> default_primes();

std::vector<PrimeField> parse_prime_list(const std::string& text);

} // namespace permres
