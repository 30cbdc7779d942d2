#pragma once

#include <stdexcept>
#include <string>

namespace permres {

/// Invalid user input: bad parameters, malformed files, unsupported ideals.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computed quantity violated an invariant that must hold by construction.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Ranks over two configured primes disagree, or a denominator vanishes mod p.
class BadPrimeError : public InternalError {
public:
    explicit BadPrimeError(const std::string& what) : InternalError(what) {}
};

} // namespace permres
