#include "permres/monomial.hpp"

#include <algorithm>

#include "permres/errors.hpp"

namespace permres {

Monomial Monomial::variable(VarIndex v, Exponent e) {
    Monomial m;
    if (e > 0) {
        m.factors_.push_back({v, e});
        m.degree_ = e;
    }
    return m;
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
    Monomial m;
    for (std::size_t v = 0; v < exponents.size(); ++v) {
        if (exponents[v] < 0) throw DomainError("negative exponent");
        if (exponents[v] == 0) continue;
        m.factors_.push_back({static_cast<VarIndex>(v), static_cast<Exponent>(exponents[v])});
        m.degree_ += exponents[v];
    }
    return m;
}

Monomial Monomial::from_mask(std::uint64_t mask) {
    Monomial m;
    for (VarIndex v = 0; mask; ++v, mask >>= 1) {
        if (mask & 1u) {
            m.factors_.push_back({v, 1});
            ++m.degree_;
        }
    }
    return m;
}

Exponent Monomial::exponent(VarIndex v) const {
    for (const auto& f : factors_)
        if (f.var == v) return f.exp;
    return 0;
}

bool Monomial::is_squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.exp == 1; });
}

std::uint64_t Monomial::support_mask() const {
    std::uint64_t mask = 0;
    for (const auto& f : factors_) {
        if (f.var >= 64) throw DomainError("support mask needs variables below 64");
        mask |= std::uint64_t{1} << f.var;
    }
    return mask;
}

std::vector<int> Monomial::dense(int variable_count) const {
    std::vector<int> out(static_cast<std::size_t>(variable_count), 0);
    for (const auto& f : factors_) {
        if (f.var >= variable_count) throw DomainError("variable index out of range");
        out[f.var] = f.exp;
    }
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    auto it = other.factors_.begin();
    for (const auto& f : factors_) {
        while (it != other.factors_.end() && it->var < f.var) ++it;
        if (it == other.factors_.end() || it->var != f.var || it->exp < f.exp) return false;
    }
    return true;
}

std::optional<Monomial> Monomial::quotient_of(const Monomial& other) const {
    if (!divides(other)) return std::nullopt;
    Monomial q;
    auto it = factors_.begin();
    for (const auto& f : other.factors_) {
        Exponent e = f.exp;
        if (it != factors_.end() && it->var == f.var) {
            e = static_cast<Exponent>(e - it->exp);
            ++it;
        }
        if (e > 0) {
            q.factors_.push_back({f.var, e});
            q.degree_ += e;
        }
    }
    return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial r;
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->var < b->var)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->var < a->var) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.push_back({a->var, std::max(a->exp, b->exp)});
            ++a;
            ++b;
        }
        r.degree_ += r.factors_.back().exp;
    }
    return r;
}

bool Monomial::coprime(const Monomial& other) const {
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->var == b->var) return false;
        if (a->var < b->var) ++a;
        else ++b;
    }
    return true;
}

std::optional<Monomial> Monomial::contract(VarIndex v) const {
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (factors_[k].var != v) continue;
        Monomial r = *this;
        if (--r.factors_[k].exp == 0) r.factors_.erase(r.factors_.begin() + static_cast<std::ptrdiff_t>(k));
        --r.degree_;
        return r;
    }
    return std::nullopt;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->var < b->var)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->var < a->var) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.push_back({a->var, static_cast<Exponent>(a->exp + b->exp)});
            ++a;
            ++b;
        }
    }
    r.degree_ = degree_ + other.degree_;
    return r;
}

std::size_t Monomial::hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const auto& f : factors_) {
        h ^= (static_cast<std::size_t>(f.var) << 16) | f.exp;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::vector<Monomial> monomials_of_degree(int variable_count, int degree) {
    std::vector<Monomial> out;
    if (degree < 0 || variable_count < 0) return out;
    if (variable_count == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    std::vector<int> e(static_cast<std::size_t>(variable_count), 0);
    // Recursive fill: x_0 takes the largest exponent first.
    auto rec = [&](auto&& self, int v, int remaining) -> void {
        if (v == variable_count - 1) {
            e[static_cast<std::size_t>(v)] = remaining;
            out.push_back(Monomial::from_exponents(e));
            return;
        }
        for (int a = remaining; a >= 0; --a) {
            e[static_cast<std::size_t>(v)] = a;
            self(self, v + 1, remaining - a);
        }
        e[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

} // namespace permres
