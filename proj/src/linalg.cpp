#include "permres/linalg.hpp"

#include <ostream>
#include <string>

namespace permres {

void RationalMatrixBuilder::add(std::size_t row, std::size_t col, const mpq_class& v) {
    if (row >= rows_ || col >= cols_) throw InternalError("matrix entry out of range");
    if (sgn(v) == 0) return;
    triplets_.push_back({static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col), v});
}

RationalMatrix RationalMatrixBuilder::build() && {
    std::sort(triplets_.begin(), triplets_.end(),
              [](const Triplet& a, const Triplet& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
    RationalMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < triplets_.size();) {
        std::size_t l = k;
        mpq_class sum = 0;
        while (l < triplets_.size() && triplets_[l].row == triplets_[k].row && triplets_[l].col == triplets_[k].col)
            sum += triplets_[l++].value;
        if (sgn(sum) != 0) m.data[triplets_[k].row].emplace_back(triplets_[k].col, std::move(sum));
        k = l;
    }
    triplets_.clear();
    return m;
}

std::size_t verified_rank(const RationalMatrix& m, std::span<const PrimeField> primes) {
    if (primes.empty()) throw InternalError("no primes configured");
    std::size_t first = 0;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        std::size_t r = rank(reduce_matrix(m, primes[k]), primes[k]);
        if (k == 0) {
            first = r;
        } else if (r != first) {
            throw BadPrimeError("rank " + std::to_string(first) + " mod " + std::to_string(primes[0].modulus()) +
                                " but " + std::to_string(r) + " mod " + std::to_string(primes[k].modulus()));
        }
    }
    return first;
}

std::size_t rank_bareiss(const RationalMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    // Clear denominators row by row; rank is unchanged.
    std::vector<std::vector<mpz_class>> a(m.rows, std::vector<mpz_class>(m.cols, 0));
    for (std::size_t r = 0; r < m.rows; ++r) {
        mpz_class l = 1;
        for (const auto& [c, v] : m.data[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        for (const auto& [c, v] : m.data[r]) a[r][c] = v.get_num() * (l / v.get_den());
    }
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t p = rank;
        while (p < m.rows && a[p][c] == 0) ++p;
        if (p == m.rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            for (std::size_t k = c + 1; k < m.cols; ++k) {
                a[r][k] = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
                mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

void write_matrix_market(std::ostream& out, const SparseMatrix<PrimeField::Element>& m, const PrimeField& field) {
    out << "%%MatrixMarket matrix coordinate integer general\n";
    out << "% modulus " << field.modulus() << "\n";
    out << m.rows << ' ' << m.cols << ' ' << m.nonzeros() << '\n';
    const long long p = field.modulus();
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (const auto& [c, v] : m.data[r]) {
            long long s = v;
            if (s > p / 2) s -= p;
            out << r + 1 << ' ' << c + 1 << ' ' << s << '\n';
        }
    }
}

void write_matrix_market(std::ostream& out, const RationalMatrix& m) {
    out << "%%MatrixMarket matrix coordinate rational general\n";
    out << m.rows << ' ' << m.cols << ' ' << m.nonzeros() << '\n';
    for (std::size_t r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : m.data[r]) out << r + 1 << ' ' << c + 1 << ' ' << v.get_str() << '\n';
}

} // namespace permres
