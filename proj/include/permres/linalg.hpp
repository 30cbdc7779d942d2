#pragma once

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "permres/errors.hpp"
#include "permres/field.hpp"

namespace permres {

/// Row-major sparse matrix; each row holds (column, value) pairs with
/// strictly increasing columns and nonzero values.
template <class Elem>
struct SparseMatrix {
    using Entry = std::pair<std::uint32_t, Elem>;
    using Row = std::vector<Entry>;

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Row> data;

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r) {}

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& r : data) n += r.size();
        return n;
    }
};

using RationalMatrix = SparseMatrix<mpq_class>;

/// Accumulates (row, col, value) contributions and produces a canonical
/// SparseMatrix (duplicates summed, zeros dropped).
class RationalMatrixBuilder {
public:
    RationalMatrixBuilder(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
    void add(std::size_t row, std::size_t col, const mpq_class& v);
    RationalMatrix build() &&;

private:
    struct Triplet {
        std::uint32_t row, col;
        mpq_class value;
    };
    std::size_t rows_, cols_;
    std::vector<Triplet> triplets_;
};

template <ExactField Field>
SparseMatrix<typename Field::Element> reduce_matrix(const RationalMatrix& m, const Field& field) {
    SparseMatrix<typename Field::Element> out(m.rows, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (const auto& [c, v] : m.data[r]) {
            auto e = field.from_rational(v);
            if (!field.is_zero(e)) out.data[r].emplace_back(c, std::move(e));
        }
    }
    return out;
}

template <class Elem>
SparseMatrix<Elem> transpose(const SparseMatrix<Elem>& m) {
    SparseMatrix<Elem> t(m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : m.data[r]) t.data[c].emplace_back(static_cast<std::uint32_t>(r), v);
    return t;
}

/// Product a*b over the field.
template <ExactField Field>
SparseMatrix<typename Field::Element> multiply(const SparseMatrix<typename Field::Element>& a,
                                               const SparseMatrix<typename Field::Element>& b,
                                               const Field& field) {
    if (a.cols != b.rows) throw InternalError("multiply: shape mismatch");
    using Elem = typename Field::Element;
    SparseMatrix<Elem> out(a.rows, b.cols);
    std::vector<Elem> acc(b.cols, field.zero());
    std::vector<char> used(b.cols, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t r = 0; r < a.rows; ++r) {
        touched.clear();
        for (const auto& [k, av] : a.data[r]) {
            for (const auto& [c, bv] : b.data[k]) {
                acc[c] = field.add(acc[c], field.mul(av, bv));
                if (!used[c]) {
                    used[c] = 1;
                    touched.push_back(c);
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        for (auto c : touched) {
            if (!field.is_zero(acc[c])) out.data[r].emplace_back(c, acc[c]);
            acc[c] = field.zero();
            used[c] = 0;
        }
    }
    return out;
}

template <ExactField Field>
bool is_zero_matrix(const SparseMatrix<typename Field::Element>& m, const Field& field) {
    for (const auto& row : m.data)
        for (const auto& [c, v] : row)
            if (!field.is_zero(v)) return false;
    return true;
}

template <ExactField Field>
bool equal_matrices(const SparseMatrix<typename Field::Element>& a,
                    const SparseMatrix<typename Field::Element>& b, const Field& field) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t r = 0; r < a.rows; ++r) {
        if (a.data[r].size() != b.data[r].size()) return false;
        for (std::size_t k = 0; k < a.data[r].size(); ++k) {
            if (a.data[r][k].first != b.data[r][k].first) return false;
            if (!field.equal(a.data[r][k].second, b.data[r][k].second)) return false;
        }
    }
    return true;
}

namespace detail {

/// Incremental row echelon form. Pivot rows are normalised to a leading 1 at
/// their smallest column; a new row is reduced against existing pivots in
/// increasing column order using a dense accumulator.
template <ExactField Field>
class Echelon {
public:
    using Elem = typename Field::Element;
    using Row = typename SparseMatrix<Elem>::Row;

    Echelon(std::size_t cols, const Field& field)
        : field_(field), pivot_of_(cols, -1), acc_(cols, field.zero()), queued_(cols, 0) {}

    std::size_t rank() const { return pivots_.size(); }

    /// Reduces the row; returns true if it was independent (and is now a pivot).
    bool insert(const Row& row) { return insert_impl(row, true); }
    /// True iff the row lies in the span of the inserted rows.
    bool in_span(const Row& row) { return !insert_impl(row, false); }

private:
    bool insert_impl(const Row& row, bool keep) {
        if (row.empty()) return false;
        heap_.clear();
        for (const auto& [c, v] : row) {
            acc_[c] = v;
            push(c);
        }
        bool independent = false;
        Row residue;
        while (!heap_.empty()) {
            std::pop_heap(heap_.begin(), heap_.end(), std::greater<>{});
            std::uint32_t c = heap_.back();
            heap_.pop_back();
            queued_[c] = 0;
            if (field_.is_zero(acc_[c])) continue;
            if (independent) {
                residue.emplace_back(c, acc_[c]);
                acc_[c] = field_.zero();
                continue;
            }
            int p = pivot_of_[c];
            if (p >= 0) {
                Elem factor = acc_[c];
                acc_[c] = field_.zero();
                const Row& prow = pivots_[static_cast<std::size_t>(p)];
                for (std::size_t k = 1; k < prow.size(); ++k) {
                    auto pc = prow[k].first;
                    acc_[pc] = field_.sub(acc_[pc], field_.mul(factor, prow[k].second));
                    push(pc);
                }
            } else {
                independent = true;
                residue.emplace_back(c, acc_[c]);
                acc_[c] = field_.zero();
            }
        }
        if (independent && keep) {
            Elem inv = field_.inv(residue.front().second);
            for (auto& e : residue) e.second = field_.mul(e.second, inv);
            pivot_of_[residue.front().first] = static_cast<int>(pivots_.size());
            pivots_.push_back(std::move(residue));
        }
        return independent;
    }

    void push(std::uint32_t c) {
        if (queued_[c]) return;
        queued_[c] = 1;
        heap_.push_back(c);
        std::push_heap(heap_.begin(), heap_.end(), std::greater<>{});
    }

    Field field_;
    std::vector<int> pivot_of_;
    std::vector<Row> pivots_;
    std::vector<Elem> acc_;
    std::vector<char> queued_;
    std::vector<std::uint32_t> heap_;
};

} // namespace detail

/// Exact rank by sparse Gaussian elimination. Columns are relabelled by
/// increasing occupancy and rows processed by increasing length, a cheap
/// Markowitz-style ordering that keeps fill-in low on these matrices.
template <ExactField Field>
std::size_t rank(const SparseMatrix<typename Field::Element>& m, const Field& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::uint32_t> count(m.cols, 0);
    for (const auto& row : m.data)
        for (const auto& [c, v] : row) ++count[c];
    std::vector<std::uint32_t> by_count(m.cols);
    std::iota(by_count.begin(), by_count.end(), 0u);
    std::stable_sort(by_count.begin(), by_count.end(),
                     [&](auto a, auto b) { return count[a] < count[b]; });
    std::vector<std::uint32_t> relabel(m.cols);
    for (std::uint32_t k = 0; k < m.cols; ++k) relabel[by_count[k]] = k;

    std::vector<std::size_t> order(m.rows);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return m.data[a].size() < m.data[b].size(); });

    detail::Echelon<Field> echelon(m.cols, field);
    typename SparseMatrix<typename Field::Element>::Row row;
    for (auto r : order) {
        row.clear();
        for (const auto& [c, v] : m.data[r])
            if (!field.is_zero(v)) row.emplace_back(relabel[c], v);
        echelon.insert(row);
        if (echelon.rank() == std::min(m.rows, m.cols)) break;
    }
    return echelon.rank();
}

/// Rank over each prime; throws BadPrimeError if they disagree.
std::size_t verified_rank(const RationalMatrix& m, std::span<const PrimeField> primes);

/// Fraction-free (Bareiss) rank over Q on a dense integer copy of the matrix.
std::size_t rank_bareiss(const RationalMatrix& m);

/// Dense reduced row echelon form over a field.
template <ExactField Field>
struct Rref {
    std::vector<std::vector<typename Field::Element>> rows; // nonzero rows only
    std::vector<std::size_t> pivot_columns;
};

template <ExactField Field>
Rref<Field> rref(std::vector<std::vector<typename Field::Element>> a, std::size_t cols, const Field& field) {
    Rref<Field> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && field.is_zero(a[p][c])) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        auto inv = field.inv(a[r][c]);
        for (std::size_t k = c; k < cols; ++k) a[r][k] = field.mul(a[r][k], inv);
        for (std::size_t q = 0; q < a.size(); ++q) {
            if (q == r || field.is_zero(a[q][c])) continue;
            auto f = a[q][c];
            for (std::size_t k = c; k < cols; ++k) a[q][k] = field.sub(a[q][k], field.mul(f, a[r][k]));
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

/// Basis of {v : A v = 0} for a dense matrix A with the given column count.
/// Basis vector k has a 1 at the k-th free column and zeros at other free columns.
template <ExactField Field>
std::vector<std::vector<typename Field::Element>> nullspace(
    const std::vector<std::vector<typename Field::Element>>& a, std::size_t cols, const Field& field) {
    auto red = rref(a, cols, field);
    std::vector<char> is_pivot(cols, 0);
    for (auto c : red.pivot_columns) is_pivot[c] = 1;
    std::vector<std::vector<typename Field::Element>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<typename Field::Element> v(cols, field.zero());
        v[f] = field.one();
        for (std::size_t k = 0; k < red.pivot_columns.size(); ++k)
            v[red.pivot_columns[k]] = field.neg(red.rows[k][f]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// MatrixMarket coordinate format ("%%MatrixMarket matrix coordinate integer general"),
/// values written as signed representatives in (-p/2, p/2].
void write_matrix_market(std::ostream& out, const SparseMatrix<PrimeField::Element>& m, const PrimeField& field);
void write_matrix_market(std::ostream& out, const RationalMatrix& m);

} // namespace permres
