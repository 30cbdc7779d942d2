#include "permres/koszul.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "permres/parallel.hpp"
#include "permres/wedge.hpp"

namespace permres {

namespace {

/// Basis element e_S (x) m_k of Lambda^a (x) Q_d.
struct Cell {
    std::uint64_t mask;
    std::uint32_t k;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CellHash {
    std::size_t operator()(const Cell& c) const { return std::hash<std::uint64_t>{}(c.mask * 0x9e3779b97f4a7c15ull ^ c.k); }
};

/// Lambda^a (x) Q_d split by multidegree.
struct Level {
    std::map<MultiDegree, std::vector<Cell>> blocks;
    const std::vector<Cell>* block(const MultiDegree& d) const {
        auto it = blocks.find(d);
        return it == blocks.end() ? nullptr : &it->second;
    }
};

Level make_level(const GradedQuotientRing& q, int a, int d) {
    Level level;
    if (d < 0 || d > q.max_degree()) return level;
    const auto& grading = q.grading();
    for (auto mask : wedges_of_degree(q.variable_count(), a)) {
        MultiDegree wedge_degree = grading.degree(WedgeMonomial(mask));
        for (std::uint32_t k = 0; k < q.dimension(d); ++k) {
            MultiDegree total = wedge_degree;
            grading.accumulate(total, q.multidegree(d, k));
            level.blocks[total].push_back({mask, k});
        }
    }
    return level;
}

using CellIndex = std::unordered_map<Cell, std::uint32_t, CellHash>;

CellIndex index_cells(const std::vector<Cell>& cells) {
    CellIndex idx;
    for (std::uint32_t k = 0; k < cells.size(); ++k) idx.emplace(cells[k], k);
    return idx;
}

/// Koszul differential from `source` (in Lambda^a (x) Q_d) into the cells
/// indexed by `target`, one row per source cell.
RationalMatrix differential(const GradedQuotientRing& q, const std::vector<Cell>& source, int d,
                            const CellIndex& target) {
    RationalMatrixBuilder b(source.size(), target.size());
    for (std::size_t r = 0; r < source.size(); ++r) {
        const auto& cell = source[r];
        for (std::uint64_t rest = cell.mask; rest; rest &= rest - 1) {
            int s = std::countr_zero(rest);
            int sign = position_sign(WedgeMonomial(cell.mask), s);
            std::uint64_t face = cell.mask & ~(std::uint64_t{1} << s);
            for (const auto& [k, c] : q.multiply(d, cell.k, static_cast<VarIndex>(s))) {
                auto it = target.find(Cell{face, k});
                if (it == target.end()) throw InternalError("Koszul image left its multidegree");
                b.add(r, it->second, sign > 0 ? c : mpq_class(-c));
            }
        }
    }
    return std::move(b).build();
}

class LevelCache {
public:
    explicit LevelCache(const GradedQuotientRing& q) : q_(q) {}
    const Level& get(int a, int d) {
        auto key = std::make_pair(a, d);
        auto it = levels_.find(key);
        if (it == levels_.end()) it = levels_.emplace(key, make_level(q_, a, d)).first;
        return it->second;
    }

private:
    const GradedQuotientRing& q_;
    std::map<std::pair<int, int>, Level> levels_;
};

std::size_t piece_betti(const GradedQuotientRing& q, const Level& in, const Level& mid, const Level& out, int i, int j,
                        std::span<const PrimeField> primes) {
    const int d = j - i;
    std::size_t total = 0;
    for (const auto& [degree, cells] : mid.blocks) {
        std::size_t h = cells.size();
        if (const auto* targets = out.block(degree); targets && i > 0) {
            h -= verified_rank(differential(q, cells, d, index_cells(*targets)), primes);
        }
        if (const auto* sources = in.block(degree); sources && d > 0) {
            h -= verified_rank(differential(q, *sources, d - 1, index_cells(cells)), primes);
        }
        total += h;
    }
    return total;
}

void check_piece_range(const GradedQuotientRing& q, int i, int j) {
    if (i < 0 || j < i) throw DomainError("Koszul piece needs 0 <= i <= j");
    if (j - i + 1 > q.max_degree()) throw DomainError("quotient ring not tabulated far enough for this piece");
}

} // namespace

KoszulPiece koszul_piece(const GradedQuotientRing& q, int i, int j) {
    check_piece_range(q, i, j);
    const int d = j - i;
    auto flatten = [&](int a, int deg) {
        std::vector<Cell> cells;
        for (auto& [md, block] : make_level(q, a, deg).blocks) cells.insert(cells.end(), block.begin(), block.end());
        std::sort(cells.begin(), cells.end());
        return cells;
    };
    auto in = flatten(i + 1, d - 1);
    auto mid = flatten(i, d);
    auto out = flatten(i - 1, d + 1);
    KoszulPiece piece;
    piece.i = i;
    piece.j = j;
    piece.middle_dimension = mid.size();
    piece.incoming = d > 0 ? differential(q, in, d - 1, index_cells(mid)) : RationalMatrix(0, mid.size());
    piece.outgoing = i > 0 ? differential(q, mid, d, index_cells(out)) : RationalMatrix(mid.size(), 0);
    return piece;
}

std::size_t koszul_betti(const GradedQuotientRing& q, int i, int j, const OracleOptions& options) {
    check_piece_range(q, i, j);
    auto primes = options.primes.empty() ? default_primes() : options.primes;
    const int d = j - i;
    return piece_betti(q, make_level(q, i + 1, d - 1), make_level(q, i, d), make_level(q, i - 1, d + 1), i, j, primes);
}

BettiTable koszul_tor_betti(const GradedQuotientRing& q, int max_i, int max_j, const OracleOptions& options,
                            int max_row) {
    if (max_j < max_i) throw DomainError("need max_j >= max_i");
    if (max_row < 0) max_row = q.max_degree() - 1;
    if (max_row > q.max_degree() - 1) throw DomainError("quotient ring not tabulated far enough for the requested rows");
    auto primes = options.primes.empty() ? default_primes() : options.primes;
    const int top_i = std::min(max_i, q.variable_count());

    std::vector<std::pair<int, int>> pieces;
    for (int i = 0; i <= top_i; ++i)
        for (int r = 0; r <= max_row && i + r <= max_j; ++r) pieces.emplace_back(i, i + r);

    LevelCache cache(q);
    for (auto [i, j] : pieces) {
        cache.get(i + 1, j - i - 1);
        cache.get(i, j - i);
        cache.get(i - 1, j - i + 1);
    }
    std::vector<std::size_t> values(pieces.size());
    parallel_for(pieces.size(), options.jobs, [&](std::size_t k) {
        auto [i, j] = pieces[k];
        const int d = j - i;
        values[k] = piece_betti(q, cache.get(i + 1, d - 1), cache.get(i, d), cache.get(i - 1, d + 1), i, j, primes);
    });
    BettiTable table;
    for (std::size_t k = 0; k < pieces.size(); ++k) table.set(pieces[k].first, pieces[k].second, values[k]);
    return table;
}

} // namespace permres
