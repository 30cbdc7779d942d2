#include "permres/wedge.hpp"

#include "permres/errors.hpp"

namespace permres {

WedgeMonomial WedgeMonomial::from_indices(const std::vector<int>& increasing) {
    std::uint64_t mask = 0;
    int last = -1;
    for (int v : increasing) {
        if (v <= last || v >= 64) throw DomainError("wedge indices must be strictly increasing and below 64");
        mask |= std::uint64_t{1} << v;
        last = v;
    }
    return WedgeMonomial(mask);
}

std::vector<int> WedgeMonomial::indices() const {
    std::vector<int> out;
    for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::vector<std::uint64_t> wedges_of_degree(int nu, int a) {
    std::vector<std::uint64_t> out;
    if (nu > 63) throw DomainError("at most 63 exterior generators");
    if (a < 0 || a > nu) return out;
    if (a == 0) return {0};
    std::uint64_t s = (std::uint64_t{1} << a) - 1;
    const std::uint64_t limit = std::uint64_t{1} << nu;
    while (s < limit) {
        out.push_back(s);
        std::uint64_t c = s & -s, r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return out;
}

WedgeProduct wedge_multiply(WedgeMonomial a, WedgeMonomial b) {
    if (a.mask() & b.mask()) return {0, WedgeMonomial{}};
    // Each factor of b passes over the factors of a that are larger than it.
    int swaps = 0;
    for (std::uint64_t m = b.mask(); m; m &= m - 1) {
        int v = std::countr_zero(m);
        std::uint64_t above = a.mask() & ~((std::uint64_t{2} << v) - 1);
        swaps += std::popcount(above);
    }
    return {swaps % 2 ? -1 : 1, WedgeMonomial(a.mask() | b.mask())};
}

void ExteriorElement::add_term(WedgeMonomial e, const Monomial& y, const mpq_class& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(Key{e, y}, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void ExteriorElement::add_ordered(const std::vector<int>& wedge_factors, const Monomial& y, const mpq_class& c) {
    WedgeMonomial acc;
    int sign = 1;
    for (int v : wedge_factors) {
        auto p = wedge_multiply(acc, WedgeMonomial(std::uint64_t{1} << v));
        if (p.sign == 0) return;
        sign *= p.sign;
        acc = p.value;
    }
    add_term(acc, y, sign > 0 ? c : mpq_class(-c));
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

ExteriorElement ExteriorElement::scaled(const mpq_class& c) const {
    ExteriorElement r;
    if (sgn(c) == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

ExteriorElement dual_koszul_differential(const ExteriorElement& element, int variable_count) {
    ExteriorElement r;
    for (const auto& [key, c] : element.terms()) {
        const auto& [e, y] = key;
        for (const auto& f : y.factors()) {
            if (f.var >= variable_count) throw DomainError("dual variable out of range");
            if (e.contains(f.var)) continue;
            auto p = wedge_multiply(e, WedgeMonomial(std::uint64_t{1} << f.var));
            r.add_term(p.value, *y.contract(f.var), p.sign > 0 ? c : mpq_class(-c));
        }
    }
    return r;
}

} // namespace permres
