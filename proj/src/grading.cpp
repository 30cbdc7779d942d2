#include "permres/grading.hpp"

#include "permres/errors.hpp"

namespace permres {

Grading::Grading(std::string name, std::vector<MultiDegree> weights)
    : name_(std::move(name)), weights_(std::move(weights)) {
    dimension_ = weights_.empty() ? 0 : static_cast<int>(weights_.front().size());
    for (const auto& w : weights_)
        if (static_cast<int>(w.size()) != dimension_) throw DomainError("grading weights of unequal length");
}

Grading Grading::standard(int variable_count) {
    return {"standard", std::vector<MultiDegree>(static_cast<std::size_t>(variable_count), MultiDegree{1})};
}

Grading Grading::fine(int variable_count) {
    std::vector<MultiDegree> w(static_cast<std::size_t>(variable_count), MultiDegree(static_cast<std::size_t>(variable_count), 0));
    for (int v = 0; v < variable_count; ++v) w[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 1;
    return {"fine", std::move(w)};
}

Grading Grading::grid(int n) {
    std::vector<MultiDegree> w(static_cast<std::size_t>(2 * n), MultiDegree(static_cast<std::size_t>(n + 1), 0));
    for (int row = 1; row <= 2; ++row) {
        for (int col = 1; col <= n; ++col) {
            auto& d = w[grid_variable(row, col, n)];
            d[static_cast<std::size_t>(col - 1)] = 1;
            if (row == 2) d[static_cast<std::size_t>(n)] = 1;
        }
    }
    return {"grid", std::move(w)};
}

MultiDegree Grading::degree(const Monomial& m) const {
    MultiDegree d = zero();
    for (const auto& f : m.factors()) {
        if (f.var >= weights_.size()) throw DomainError("variable outside the graded ring");
        const auto& w = weights_[f.var];
        for (int k = 0; k < dimension_; ++k) d[static_cast<std::size_t>(k)] += f.exp * w[static_cast<std::size_t>(k)];
    }
    return d;
}

MultiDegree Grading::degree(WedgeMonomial e) const {
    MultiDegree d = zero();
    for (int v : e.indices()) {
        if (v >= variable_count()) throw DomainError("exterior generator outside the graded ring");
        accumulate(d, weights_[static_cast<std::size_t>(v)]);
    }
    return d;
}

void Grading::accumulate(MultiDegree& into, const MultiDegree& d) const {
    for (std::size_t k = 0; k < into.size(); ++k) into[k] += d[k];
}

Grading choose_grading(const std::vector<Polynomial>& generators, int variable_count, std::optional<int> grid_columns) {
    std::vector<Grading> candidates{Grading::fine(variable_count)};
    if (grid_columns && 2 * *grid_columns == variable_count) candidates.push_back(Grading::grid(*grid_columns));
    candidates.push_back(Grading::standard(variable_count));
    for (auto& g : candidates) {
        bool ok = true;
        for (const auto& f : generators) ok = ok && g.is_homogeneous(f);
        if (ok) return g;
    }
    throw DomainError("generators are not homogeneous");
}

} // namespace permres
