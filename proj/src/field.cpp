#include "permres/field.hpp"

#include <cstdlib>
#include <sstream>

namespace permres {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || p >= (1u << 31) || !is_prime(p))
        throw DomainError("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw InternalError("inverse of zero in GF(" + std::to_string(p_) + ")");
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_integer(const mpz_class& v) const {
    return static_cast<Element>(mpz_fdiv_ui(v.get_mpz_t(), p_));
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
    Element num = from_integer(q.get_num());
    if (q.get_den() == 1) return num;
    Element den = from_integer(q.get_den());
    if (den == 0)
        throw BadPrimeError("prime " + std::to_string(p_) + " divides the denominator of " + q.get_str());
    return mul(num, inv(den));
}

RationalField::Element RationalField::inv(const Element& a) const {
    if (sgn(a) == 0) throw InternalError("inverse of zero in Q");
    return 1 / a;
}

std::vector<PrimeField> parse_prime_list(const std::string& text) {
    std::vector<PrimeField> primes;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(item, &used);
        } catch (const std::exception&) {
            throw DomainError("not a prime: '" + item + "'");
        }
        if (used != item.size() || value >= (1ull << 31)) throw DomainError("not a prime: '" + item + "'");
        primes.emplace_back(static_cast<std::uint32_t>(value));
    }
    if (primes.empty()) throw DomainError("empty prime list");
    return primes;
}

std::vector<PrimeField> default_primes() {
    if (const char* env = std::getenv("PERMRES_PRIMES"); env && *env) return parse_prime_list(env);
    return {PrimeField(kDefaultPrime), PrimeField(kVerificationPrime)};
}

} // namespace permres
