#include "permres/monomial_order.hpp"

#include <algorithm>
#include <numeric>

#include "permres/errors.hpp"

namespace permres {

namespace {

struct RankedFactor {
    int rank;
    int exp;
};

void ranked(const Monomial& m, const std::vector<int>& rank_of, std::vector<RankedFactor>& out) {
    out.clear();
    for (const auto& f : m.factors()) {
        if (f.var >= rank_of.size()) throw DomainError("variable outside the order");
        out.push_back({rank_of[f.var], f.exp});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.rank < b.rank; });
}

} // namespace

MonomialOrder::MonomialOrder(Kind kind, std::vector<VarIndex> priority)
    : kind_(kind), priority_(std::move(priority)) {
    std::vector<VarIndex> sorted = priority_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
        if (sorted[k] != k) throw DomainError("variable priority is not a permutation");
    rank_of_.resize(priority_.size());
    for (std::size_t k = 0; k < priority_.size(); ++k) rank_of_[priority_[k]] = static_cast<int>(k);
}

MonomialOrder MonomialOrder::lex(int variable_count) {
    std::vector<VarIndex> p(static_cast<std::size_t>(variable_count));
    std::iota(p.begin(), p.end(), VarIndex{0});
    return {Kind::Lex, std::move(p)};
}

MonomialOrder MonomialOrder::graded_lex(int variable_count) {
    std::vector<VarIndex> p(static_cast<std::size_t>(variable_count));
    std::iota(p.begin(), p.end(), VarIndex{0});
    return {Kind::GradedLex, std::move(p)};
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind_ == Kind::GradedLex && a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    thread_local std::vector<RankedFactor> ra, rb;
    ranked(a, rank_of_, ra);
    ranked(b, rank_of_, rb);
    std::size_t k = 0;
    for (; k < ra.size() && k < rb.size(); ++k) {
        if (ra[k].rank != rb[k].rank) return ra[k].rank < rb[k].rank ? 1 : -1;
        if (ra[k].exp != rb[k].exp) return ra[k].exp > rb[k].exp ? 1 : -1;
    }
    if (k < ra.size()) return 1;
    if (k < rb.size()) return -1;
    return 0;
}

bool has_antidiagonal_property(const MonomialOrder& order, int n) {
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j < i; ++j) {
            Monomial anti = Monomial::variable(grid_variable(1, i, n)) * Monomial::variable(grid_variable(2, j, n));
            Monomial diag = Monomial::variable(grid_variable(1, j, n)) * Monomial::variable(grid_variable(2, i, n));
            if (!order.greater(anti, diag)) return false;
        }
    }
    return true;
}

MonomialOrder antidiagonal_order(int n) {
    if (n < 1) throw DomainError("antidiagonal order needs n >= 1");
    std::vector<VarIndex> p;
    for (int c = 1; c <= n; ++c) p.push_back(grid_variable(2, c, n));
    for (int c = 1; c <= n; ++c) p.push_back(grid_variable(1, c, n));
    MonomialOrder order(MonomialOrder::Kind::Lex, std::move(p));
    if (!has_antidiagonal_property(order, n)) throw InternalError("antidiagonal order self-check failed");
    return order;
}

MonomialOrder diagonal_order(int n) {
    if (n < 1) throw DomainError("diagonal order needs n >= 1");
    return MonomialOrder::lex(2 * n);
}

} // namespace permres
