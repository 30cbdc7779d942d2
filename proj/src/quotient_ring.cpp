#include "permres/quotient_ring.hpp"

#include "permres/errors.hpp"

namespace permres {

GradedQuotientRing::GradedQuotientRing(const GeneratingSet& groebner_basis, int variable_count, int max_degree,
                                       Grading grading)
    : gb_(groebner_basis),
      initial_(initial_ideal(groebner_basis)),
      variable_count_(variable_count),
      max_degree_(max_degree),
      grading_(std::move(grading)) {
    if (max_degree < 0) throw DomainError("maximal degree must be nonnegative");
    if (grading_.variable_count() != variable_count || gb_.order().variable_count() != variable_count)
        throw DomainError("ring, order and grading disagree on the number of variables");
    for (const auto& g : gb_.generators())
        if (!grading_.is_homogeneous(g)) throw DomainError("generator is not homogeneous for the " + grading_.name() + " grading");
    if (!is_groebner_basis(gb_)) throw DomainError("generators do not form a Groebner basis for the chosen order");

    const auto levels = static_cast<std::size_t>(max_degree + 1);
    basis_.resize(levels);
    multidegrees_.resize(levels);
    index_.resize(levels);
    products_.resize(levels);
    for (int d = 0; d <= max_degree; ++d) {
        auto& b = basis_[static_cast<std::size_t>(d)];
        b = standard_monomials(initial_, d, variable_count);
        for (std::uint32_t k = 0; k < b.size(); ++k) {
            index_[static_cast<std::size_t>(d)].emplace(b[k], k);
            multidegrees_[static_cast<std::size_t>(d)].push_back(grading_.degree(b[k]));
        }
    }
    for (int d = 0; d < max_degree; ++d) {
        const auto& b = basis_[static_cast<std::size_t>(d)];
        auto& table = products_[static_cast<std::size_t>(d)];
        table.resize(b.size() * static_cast<std::size_t>(variable_count));
        for (std::size_t k = 0; k < b.size(); ++k) {
            for (int v = 0; v < variable_count; ++v) {
                Monomial m = b[k] * Monomial::variable(static_cast<VarIndex>(v));
                Vector& out = table[k * static_cast<std::size_t>(variable_count) + static_cast<std::size_t>(v)];
                if (!initial_.contains(m)) {
                    out.emplace_back(index_of(d + 1, m), 1);
                    continue;
                }
                const Polynomial reduced = normal_form(Polynomial::term(m, 1), gb_);
                for (const auto& [t, c] : reduced.terms())
                    out.emplace_back(index_of(d + 1, t), c);
            }
        }
    }
}

const GradedQuotientRing::Vector& GradedQuotientRing::multiply(int degree, std::size_t index, VarIndex v) const {
    if (degree < 0 || degree >= max_degree_) throw InternalError("product beyond the tabulated degrees");
    return products_[static_cast<std::size_t>(degree)][index * static_cast<std::size_t>(variable_count_) + v];
}

std::uint32_t GradedQuotientRing::index_of(int degree, const Monomial& m) const {
    const auto& idx = index_.at(static_cast<std::size_t>(degree));
    auto it = idx.find(m);
    if (it == idx.end()) throw InternalError("normal form left the standard monomials");
    return it->second;
}

} // namespace permres
