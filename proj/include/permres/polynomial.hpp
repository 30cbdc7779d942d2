#pragma once

#include <map>
#include <optional>
#include <utility>

#include "permres/errors.hpp"
#include "permres/field.hpp"
#include "permres/monomial.hpp"
#include "permres/monomial_order.hpp"

namespace permres {

/// Sparse polynomial: a map monomial -> nonzero coefficient in Field.
template <ExactField Field>
class BasicPolynomial {
public:
    using Element = typename Field::Element;
    using TermMap = std::map<Monomial, Element>;

    BasicPolynomial()
        requires std::default_initializable<Field>
    = default;
    explicit BasicPolynomial(const Field& field) : field_(field) {}

    static BasicPolynomial term(const Monomial& m, const Element& c, const Field& field = Field{}) {
        BasicPolynomial p(field);
        p.add_term(m, c);
        return p;
    }

    const Field& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Element coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? field_.zero() : it->second;
    }

    void add_term(const Monomial& m, const Element& c) {
        if (field_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }

    /// Degree of every term, or empty if the polynomial is zero or inhomogeneous.
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return std::nullopt;
        return d;
    }
    bool is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

    const std::pair<const Monomial, Element>& leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw InternalError("leading term of the zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.greater(it->first, best->first)) best = it;
        return *best;
    }
    const Monomial& leading_monomial(const MonomialOrder& order) const {
        return leading_term(order).first;
    }
    /// Smallest term under the order (the initial term of a functional on R/I).
    const Monomial& trailing_monomial(const MonomialOrder& order) const {
        if (terms_.empty()) throw InternalError("trailing term of the zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.less(it->first, best->first)) best = it;
        return best->first;
    }

    BasicPolynomial scaled(const Element& c) const {
        BasicPolynomial r(field_);
        if (field_.is_zero(c)) return r;
        for (const auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_.mul(v, c));
        return r;
    }
    BasicPolynomial times(const Monomial& u) const {
        BasicPolynomial r(field_);
        for (const auto& [m, v] : terms_) r.terms_.emplace(m * u, v);
        return r;
    }

    BasicPolynomial& operator+=(const BasicPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    BasicPolynomial& operator-=(const BasicPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
        return *this;
    }
    friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
    friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
    friend BasicPolynomial operator-(const BasicPolynomial& a) { return a.scaled(a.field_.neg(a.field_.one())); }
    friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
        BasicPolynomial r(a.field_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, a.field_.mul(ca, cb));
        return r;
    }

    friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [m, c] : a.terms_) {
            if (!(m == it->first) || !a.field_.equal(c, it->second)) return false;
            ++it;
        }
        return true;
    }

private:
    [[no_unique_address]] Field field_;
    TermMap terms_;
};

using Polynomial = BasicPolynomial<RationalField>;

/// Coefficientwise reduction of a rational polynomial into GF(p).
BasicPolynomial<PrimeField> reduce_mod(const Polynomial& f, const PrimeField& field);

} // namespace permres
