#include "permres/bgg.hpp"

#include <algorithm>
#include <bit>

#include "permres/errors.hpp"
#include "permres/linalg.hpp"
#include "permres/parallel.hpp"

namespace permres {

namespace {

/// e_S (x) phi with phi a perp basis element.
struct Cell {
    std::uint64_t mask;
    const DualQuotient::Functional* phi;
};

/// Lambda^a (x) N_l^vee split by multidegree.
struct Level {
    std::map<MultiDegree, std::vector<Cell>> blocks;
    const std::vector<Cell>* block(const MultiDegree& d) const {
        auto it = blocks.find(d);
        return it == blocks.end() ? nullptr : &it->second;
    }
};

Level make_level(const DualQuotient& dual, int a, int ell) {
    Level level;
    if (ell < 0 || ell > dual.max_degree()) return level;
    const auto& grading = dual.grading();
    for (auto mask : wedges_of_degree(dual.variable_count(), a)) {
        MultiDegree wedge_degree = grading.degree(WedgeMonomial(mask));
        for (const auto& [degree, functionals] : dual.perp(ell)) {
            MultiDegree total = wedge_degree;
            grading.accumulate(total, degree);
            auto& block = level.blocks[total];
            for (const auto& phi : functionals) block.push_back({mask, &phi});
        }
    }
    return level;
}

using AmbientKey = std::pair<std::uint64_t, Monomial>;

/// Assigns column numbers to ambient cells e_S (x) y^u on first use.
class AmbientColumns {
public:
    std::uint32_t operator()(std::uint64_t mask, const Monomial& u) {
        auto [it, inserted] = index_.try_emplace(AmbientKey{mask, u}, static_cast<std::uint32_t>(keys_.size()));
        if (inserted) keys_.push_back(it->first);
        return it->second;
    }
    std::size_t size() const { return keys_.size(); }
    const std::vector<AmbientKey>& keys() const { return keys_; }

private:
    std::map<AmbientKey, std::uint32_t> index_;
    std::vector<AmbientKey> keys_;
};

/// Rows of (e_S, y^u -> coefficient) images of the BGG differential.
using SparseRows = std::vector<std::vector<std::pair<std::uint32_t, mpq_class>>>;

void add_image(std::uint64_t mask, const Monomial& u, const mpq_class& c, int nu, AmbientColumns& columns,
               std::vector<std::pair<std::uint32_t, mpq_class>>& row) {
    for (const auto& f : u.factors()) {
        if (f.var >= nu) throw DomainError("dual variable out of range");
        std::uint64_t bit = std::uint64_t{1} << f.var;
        if (mask & bit) continue;
        auto p = wedge_multiply(WedgeMonomial(mask), WedgeMonomial(bit));
        row.emplace_back(columns(p.value.mask(), *u.contract(f.var)), p.sign > 0 ? c : mpq_class(-c));
    }
}

SparseRows images(const std::vector<Cell>& cells, int nu, AmbientColumns& columns) {
    SparseRows rows(cells.size());
    for (std::size_t r = 0; r < cells.size(); ++r)
        for (const auto& [u, c] : *cells[r].phi) add_image(cells[r].mask, u, c, nu, columns, rows[r]);
    return rows;
}

RationalMatrix to_matrix(const SparseRows& rows, std::size_t cols) {
    RationalMatrixBuilder b(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) b.add(r, c, v);
    return std::move(b).build();
}

std::size_t image_rank(const std::vector<Cell>& cells, int nu, std::span<const PrimeField> primes) {
    AmbientColumns columns;
    auto rows = images(cells, nu, columns);
    return verified_rank(to_matrix(rows, columns.size()), primes);
}

std::size_t homology(const DualQuotient& dual, const Level& in, const Level& mid, std::span<const PrimeField> primes) {
    const int nu = dual.variable_count();
    std::size_t total = 0;
    for (const auto& [degree, cells] : mid.blocks) {
        std::size_t h = cells.size() - image_rank(cells, nu, primes);
        if (const auto* sources = in.block(degree)) h -= image_rank(*sources, nu, primes);
        total += h;
    }
    return total;
}

void check_range(const DualQuotient& dual, int ell, int s) {
    if (ell < 0 || s < ell) throw DomainError("BGG piece needs 0 <= l <= s");
    if (ell + 1 > dual.max_degree()) throw DomainError("dual spaces not computed far enough for this piece");
}

} // namespace

DualQuotient::DualQuotient(const std::vector<Polynomial>& generators, int variable_count, int max_degree,
                           Grading grading)
    : variable_count_(variable_count), max_degree_(max_degree), grading_(std::move(grading)) {
    if (max_degree < 0) throw DomainError("maximal degree must be nonnegative");
    if (grading_.variable_count() != variable_count) throw DomainError("grading and ring disagree on the number of variables");
    for (const auto& g : generators) {
        if (g.is_zero() || !g.homogeneous_degree()) throw DomainError("generators must be nonzero and homogeneous");
        if (!grading_.is_homogeneous(g)) throw DomainError("generator is not homogeneous for the " + grading_.name() + " grading");
    }
    const RationalField q;
    perp_.resize(static_cast<std::size_t>(max_degree + 1));
    for (int d = 0; d <= max_degree; ++d) {
        std::map<MultiDegree, std::vector<Monomial>> monomials;
        for (auto& m : monomials_of_degree(variable_count, d)) monomials[grading_.degree(m)].push_back(std::move(m));
        std::map<MultiDegree, std::vector<Polynomial>> constraints;
        for (const auto& g : generators) {
            int e = *g.homogeneous_degree();
            if (e > d) continue;
            for (const auto& u : monomials_of_degree(variable_count, d - e)) {
                Polynomial ug = g.times(u);
                constraints[grading_.degree(ug.terms().begin()->first)].push_back(std::move(ug));
            }
        }
        auto& out = perp_[static_cast<std::size_t>(d)];
        for (const auto& [degree, ms] : monomials) {
            std::map<Monomial, std::size_t> column;
            for (std::size_t k = 0; k < ms.size(); ++k) column.emplace(ms[k], k);
            std::vector<std::vector<mpq_class>> rows;
            if (auto it = constraints.find(degree); it != constraints.end()) {
                for (const auto& f : it->second) {
                    std::vector<mpq_class> row(ms.size(), 0);
                    for (const auto& [m, c] : f.terms()) row[column.at(m)] = c;
                    rows.push_back(std::move(row));
                }
            }
            auto kernel = nullspace(rows, ms.size(), q);
            if (kernel.empty()) continue;
            auto& block = out[degree];
            for (const auto& v : kernel) {
                Functional phi;
                for (std::size_t k = 0; k < v.size(); ++k)
                    if (sgn(v[k]) != 0) phi.emplace_back(ms[k], v[k]);
                block.push_back(std::move(phi));
            }
        }
    }
}

std::size_t DualQuotient::dimension(int degree) const {
    std::size_t n = 0;
    for (const auto& [d, block] : perp(degree)) n += block.size();
    return n;
}

BggPiece bgg_piece(const DualQuotient& dual, int ell, int s) {
    check_range(dual, ell, s);
    const int a = s - ell;
    const int nu = dual.variable_count();
    auto flatten = [](const Level& level) {
        std::vector<Cell> cells;
        for (const auto& [d, block] : level.blocks) cells.insert(cells.end(), block.begin(), block.end());
        return cells;
    };
    auto in_level = make_level(dual, a - 1, ell + 1);
    auto mid_level = make_level(dual, a, ell);
    auto in = flatten(in_level);
    auto mid = flatten(mid_level);

    BggPiece piece;
    piece.ell = ell;
    piece.s = s;
    piece.middle_dimension = mid.size();
    AmbientColumns out_columns;
    auto out_rows = images(mid, nu, out_columns);
    piece.outgoing = to_matrix(out_rows, out_columns.size());

    AmbientColumns in_columns;
    auto in_rows = images(in, nu, in_columns);
    piece.incoming = to_matrix(in_rows, in_columns.size());

    AmbientColumns next_columns;
    SparseRows ambient_rows(in_columns.size());
    for (std::size_t r = 0; r < in_columns.size(); ++r) {
        const auto& [mask, u] = in_columns.keys()[r];
        add_image(mask, u, 1, nu, next_columns, ambient_rows[r]);
    }
    piece.ambient = to_matrix(ambient_rows, next_columns.size());
    return piece;
}

std::size_t bgg_homology_dim(const DualQuotient& dual, int ell, int s, const OracleOptions& options) {
    check_range(dual, ell, s);
    auto primes = options.primes.empty() ? default_primes() : options.primes;
    const int a = s - ell;
    return homology(dual, make_level(dual, a - 1, ell + 1), make_level(dual, a, ell), primes);
}

BettiTable bgg_betti_table(const DualQuotient& dual, int max_i, int max_row, const OracleOptions& options) {
    if (max_row > dual.max_degree() - 1) throw DomainError("dual spaces not computed far enough for the requested rows");
    auto primes = options.primes.empty() ? default_primes() : options.primes;
    const int top_i = std::min(max_i, dual.variable_count());
    std::map<std::pair<int, int>, Level> levels; // (wedge degree, l)
    std::vector<std::pair<int, int>> pieces;     // (l, s)
    for (int ell = 0; ell <= max_row; ++ell) {
        for (int i = 0; i <= top_i; ++i) {
            pieces.emplace_back(ell, i + ell);
            for (auto key : {std::make_pair(i - 1, ell + 1), std::make_pair(i, ell)})
                if (!levels.contains(key)) levels.emplace(key, make_level(dual, key.first, key.second));
        }
    }
    std::vector<std::size_t> values(pieces.size());
    parallel_for(pieces.size(), options.jobs, [&](std::size_t k) {
        auto [ell, s] = pieces[k];
        int a = s - ell;
        values[k] = homology(dual, levels.at({a - 1, ell + 1}), levels.at({a, ell}), primes);
    });
    BettiTable table;
    for (std::size_t k = 0; k < pieces.size(); ++k) table.set(pieces[k].second - pieces[k].first, pieces[k].second, values[k]);
    return table;
}

bool is_bgg_boundary(const DualQuotient& dual, const ExteriorElement& x, int ell, const OracleOptions& options) {
    if (x.is_zero()) return true;
    if (ell + 1 > dual.max_degree()) throw DomainError("dual spaces not computed far enough");
    auto primes = options.primes.empty() ? default_primes() : options.primes;
    const int nu = dual.variable_count();
    const auto& grading = dual.grading();

    std::map<MultiDegree, std::vector<std::pair<AmbientKey, mpq_class>>> parts;
    int a = -1;
    for (const auto& [key, c] : x.terms()) {
        const auto& [e, u] = key;
        if (u.degree() != ell) throw DomainError("element is not in the requested degree");
        if (a < 0) a = e.degree();
        if (e.degree() != a) throw DomainError("element mixes exterior degrees");
        MultiDegree d = grading.degree(e);
        grading.accumulate(d, grading.degree(u));
        parts[d].emplace_back(AmbientKey{e.mask(), u}, c);
    }
    auto sources = make_level(dual, a - 1, ell + 1);
    for (const auto& [degree, terms] : parts) {
        AmbientColumns columns;
        SparseRows rows;
        if (const auto* block = sources.block(degree)) rows = images(*block, nu, columns);
        std::vector<std::pair<std::uint32_t, mpq_class>> target;
        for (const auto& [key, c] : terms) target.emplace_back(columns(key.first, key.second), c);
        rows.push_back(target);
        auto m = to_matrix(rows, columns.size());
        std::optional<bool> verdict;
        for (const auto& p : primes) {
            auto reduced = reduce_matrix(m, p);
            detail::Echelon<PrimeField> echelon(m.cols, p);
            for (std::size_t r = 0; r + 1 < reduced.rows; ++r) echelon.insert(reduced.data[r]);
            bool inside = echelon.in_span(reduced.data.back());
            if (verdict && *verdict != inside) throw BadPrimeError("boundary test depends on the prime");
            verdict = inside;
        }
        if (!*verdict) return false;
    }
    return true;
}

} // namespace permres
