#include "permres/perp_basis.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "permres/bgg.hpp"
#include "permres/errors.hpp"
#include "permres/grading.hpp"
#include "permres/groebner.hpp"
#include "permres/linalg.hpp"
#include "permres/permanental.hpp"

namespace permres {

namespace {

constexpr int kTopDegree = 5;

int checked_column_count(int n) {
    if (n < 2 || n > 5) throw DomainError("perp bases are built for 2 <= n <= 5");
    return n;
}

struct Grid {
    int n;
    Monomial y(int row, int col, int e = 1) const {
        return Monomial::variable(grid_variable(row, col, n), static_cast<Exponent>(e));
    }
};

bool in_monomial_part(const Monomial& u, int n) {
    bool row1[64] = {}, row2[64] = {};
    for (const auto& f : u.factors()) {
        int row = f.var / n, col = f.var % n;
        (row == 0 ? row1 : row2)[col] = true;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && row1[i] && row2[j]) return false;
    return true;
}

/// q = y_{1i}^2 y_{2j}^2 - y_{1j} y_{2i} b.
Polynomial binding_quartic(int n, int i, int j) {
    Grid g{n};
    Polynomial q = Polynomial::term(g.y(1, i, 2) * g.y(2, j, 2), 1);
    q -= binding_quadric(n, i, j).times(g.y(1, j) * g.y(2, i));
    return q;
}

/// Binding elements of degree k for columns i < j with their recorded
/// initial (left-most) monomials, in list order.
std::vector<std::pair<Polynomial, Monomial>> binding_elements(int n, int k, int i, int j) {
    Grid g{n};
    Polynomial b = binding_quadric(n, i, j);
    Monomial lead_b = g.y(1, i) * g.y(2, j);
    Polynomial q = binding_quartic(n, i, j);
    Monomial lead_q = g.y(1, i, 2) * g.y(2, j, 2);
    std::vector<std::pair<Polynomial, Monomial>> out;
    auto by_b = [&](const Monomial& u) { out.emplace_back(b.times(u), lead_b * u); };
    auto by_q = [&](const Monomial& u) { out.emplace_back(q.times(u), lead_q * u); };
    switch (k) {
    case 2:
        by_b(Monomial{});
        break;
    case 3:
        for (const auto& u : {g.y(1, i), g.y(2, i), g.y(1, j), g.y(2, j)}) by_b(u);
        break;
    case 4:
        for (const auto& u : {g.y(1, i, 2), g.y(2, i, 2), g.y(1, i) * g.y(1, j), g.y(2, i) * g.y(2, j), g.y(1, j, 2),
                              g.y(2, j, 2), g.y(1, i) * g.y(2, i), g.y(1, j) * g.y(2, j)})
            by_b(u);
        out.emplace_back(q, lead_q);
        break;
    case 5:
        for (const auto& u : {g.y(1, i, 3), g.y(2, i, 3), g.y(1, i, 2) * g.y(1, j), g.y(2, i, 2) * g.y(2, j),
                              g.y(1, i) * g.y(1, j, 2), g.y(2, i) * g.y(2, j, 2), g.y(1, j, 3), g.y(2, j, 3)})
            by_b(u);
        for (const auto& u : {g.y(1, i), g.y(2, i), g.y(1, j), g.y(2, j)}) by_q(u);
        for (const auto& u : {g.y(1, i, 2) * g.y(2, i), g.y(1, j, 2) * g.y(2, j), g.y(1, i) * g.y(2, i, 2),
                              g.y(1, j) * g.y(2, j, 2)})
            by_b(u);
        break;
    default:
        break;
    }
    return out;
}

/// x.phi for a polynomial x acting on a functional by contraction.
Polynomial contract(const Polynomial& x, const Polynomial& phi) {
    Polynomial r;
    for (const auto& [xm, xc] : x.terms())
        for (const auto& [u, c] : phi.terms())
            if (auto q = xm.quotient_of(u)) r.add_term(*q, xc * c);
    return r;
}

/// Coordinates by repeatedly cancelling the smallest monomial against the
/// basis element whose initial monomial it is.
std::vector<mpq_class> solve_triangular(Polynomial phi, const std::vector<Polynomial>& elements,
                                        const std::map<Monomial, std::size_t>& by_initial, const MonomialOrder& order) {
    std::vector<mpq_class> coords(elements.size(), 0);
    while (!phi.is_zero()) {
        const Monomial u = phi.trailing_monomial(order);
        auto it = by_initial.find(u);
        if (it == by_initial.end()) throw InternalError("element is not in the span of the perp basis");
        const auto& e = elements[it->second];
        mpq_class c = phi.coefficient(u) / e.coefficient(u);
        coords[it->second] += c;
        phi -= e.scaled(c);
    }
    return coords;
}

using CoordinateMatrix = RationalMatrix;

/// Matrix (rows: basis of level k, columns: basis of level k-1) of
/// contraction by x_v in the chosen coordinates.
template <class Element, class Coordinates>
CoordinateMatrix contraction_matrix(const PerpBasis& source, std::size_t target_size, VarIndex v, Element element,
                                    Coordinates coordinates) {
    RationalMatrixBuilder b(source.size(), target_size);
    for (std::size_t r = 0; r < source.size(); ++r) {
        Polynomial image;
        const Polynomial p = element(r);
        for (const auto& [u, c] : p.terms())
            if (auto q = u.contract(v)) image.add_term(*q, c);
        auto coords = coordinates(image);
        for (std::size_t col = 0; col < coords.size(); ++col) b.add(r, col, coords[col]);
    }
    return std::move(b).build();
}

ExteriorElement transfer(const ExteriorElement& x, int k,
                         const std::function<std::vector<mpq_class>(const Polynomial&)>& coordinates,
                         const std::function<Polynomial(std::size_t)>& element) {
    std::map<WedgeMonomial, Polynomial> parts;
    for (const auto& [key, c] : x.terms()) {
        if (key.second.degree() != k) throw DomainError("element is not in the requested degree");
        parts[key.first].add_term(key.second, c);
    }
    ExteriorElement out;
    for (const auto& [e, phi] : parts) {
        auto coords = coordinates(phi);
        for (std::size_t idx = 0; idx < coords.size(); ++idx) {
            if (sgn(coords[idx]) == 0) continue;
            const Polynomial p = element(idx);
            for (const auto& [u, c] : p.terms()) out.add_term(e, u, c * coords[idx]);
        }
    }
    return out;
}

} // namespace

Polynomial PerpBasis::full_element(std::size_t index) const {
    if (index < monomials.size()) return Polynomial::term(monomials[index], 1);
    return binding.at(index - monomials.size());
}

Polynomial PerpBasis::initial_element(std::size_t index) const {
    if (index < monomials.size()) return Polynomial::term(monomials[index], 1);
    return Polynomial::term(initial.at(index - monomials.size()), 1);
}

Polynomial binding_quadric(int n, int i, int j) {
    Grid g{n};
    Polynomial b = Polynomial::term(g.y(1, i) * g.y(2, j), 1);
    b.add_term(g.y(2, i) * g.y(1, j), -1);
    return b;
}

PerpComplexes::PerpComplexes(int n) : n_(n), order_(antidiagonal_order(checked_column_count(n))) {
    const int nu = 2 * n;
    auto gb = permanental_gb(n);
    auto in = initial_ideal(gb);
    auto permanents = permanental_generators(n).generators;
    auto primes = default_primes();

    for (int k = 0; k <= kTopDegree; ++k) {
        PerpBasis basis;
        basis.k = k;
        for (auto& u : monomials_of_degree(nu, k))
            if (in_monomial_part(u, n)) basis.monomials.push_back(std::move(u));
        std::sort(basis.monomials.begin(), basis.monomials.end(),
                  [&](const Monomial& a, const Monomial& b) { return order_.greater(a, b); });
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                for (auto& [element, lead] : binding_elements(n, k, i, j)) {
                    if (!(element.trailing_monomial(order_) == lead))
                        throw InternalError("recorded initial monomial is not the initial term of a binding element");
                    basis.binding.push_back(std::move(element));
                    basis.initial.push_back(std::move(lead));
                }
            }
        }

        const auto expected = hilbert_function(in, k, nu);
        if (basis.size() != expected)
            throw InternalError("perp basis in degree " + std::to_string(k) + " has " + std::to_string(basis.size()) +
                                " elements, expected " + std::to_string(expected));
        // Full side: annihilated by every permanent and linearly independent.
        std::map<Monomial, std::size_t> column;
        for (std::size_t idx = 0; idx < basis.size(); ++idx) {
            auto phi = basis.full_element(idx);
            for (const auto& p : permanents)
                if (!contract(p, phi).is_zero()) throw InternalError("binding element is not orthogonal to the ideal");
            for (const auto& [u, c] : phi.terms()) column.try_emplace(u, column.size());
        }
        RationalMatrixBuilder m(basis.size(), column.size());
        for (std::size_t idx = 0; idx < basis.size(); ++idx) {
            const Polynomial p = basis.full_element(idx);
            for (const auto& [u, c] : p.terms()) m.add(idx, column.at(u), c);
        }
        if (verified_rank(std::move(m).build(), primes) != basis.size())
            throw InternalError("perp basis elements are linearly dependent");
        // Initial side: exactly the standard monomials of degree k.
        std::vector<Monomial> initial_side = basis.monomials;
        initial_side.insert(initial_side.end(), basis.initial.begin(), basis.initial.end());
        std::sort(initial_side.begin(), initial_side.end());
        auto standard = standard_monomials(in, k, nu);
        std::sort(standard.begin(), standard.end());
        if (initial_side != standard) throw InternalError("initial basis differs from the standard monomials");
        bases_.push_back(std::move(basis));
    }
}

std::vector<mpq_class> PerpComplexes::full_coordinates(int k, const Polynomial& phi) const {
    const auto& basis = this->basis(k);
    std::vector<Polynomial> elements;
    std::map<Monomial, std::size_t> by_initial;
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        elements.push_back(basis.full_element(idx));
        by_initial.emplace(basis.initial_element(idx).terms().begin()->first, idx);
    }
    return solve_triangular(phi, elements, by_initial, order_);
}

std::vector<mpq_class> PerpComplexes::initial_coordinates(int k, const Polynomial& phi) const {
    const auto& basis = this->basis(k);
    std::map<Monomial, std::size_t> by_monomial;
    for (std::size_t idx = 0; idx < basis.size(); ++idx)
        by_monomial.emplace(basis.initial_element(idx).terms().begin()->first, idx);
    std::vector<mpq_class> coords(basis.size(), 0);
    for (const auto& [u, c] : phi.terms()) {
        auto it = by_monomial.find(u);
        if (it == by_monomial.end()) throw InternalError("element is not in the span of the initial perp basis");
        coords[it->second] = c;
    }
    return coords;
}

ExteriorElement PerpComplexes::full_to_initial(int k, const ExteriorElement& x) const {
    return transfer(
        x, k, [&](const Polynomial& p) { return full_coordinates(k, p); },
        [&](std::size_t idx) { return basis(k).initial_element(idx); });
}

ExteriorElement PerpComplexes::initial_to_full(int k, const ExteriorElement& x) const {
    return transfer(
        x, k, [&](const Polynomial& p) { return initial_coordinates(k, p); },
        [&](std::size_t idx) { return basis(k).full_element(idx); });
}

AnticommutativityReport anticommutativity_report(int n) {
    PerpComplexes perp(n);
    const int nu = 2 * n;
    const RationalField q;
    // full[k][v], initial[k][v]: contraction by x_v from level k to level k - 1.
    std::vector<std::vector<CoordinateMatrix>> full(kTopDegree + 1), initial(kTopDegree + 1);
    for (int k = 1; k <= kTopDegree; ++k) {
        const auto& source = perp.basis(k);
        const auto target_size = perp.basis(k - 1).size();
        for (int v = 0; v < nu; ++v) {
            auto var = static_cast<VarIndex>(v);
            full[k].push_back(contraction_matrix(
                source, target_size, var, [&](std::size_t r) { return source.full_element(r); },
                [&](const Polynomial& p) { return perp.full_coordinates(k - 1, p); }));
            initial[k].push_back(contraction_matrix(
                source, target_size, var, [&](std::size_t r) { return source.initial_element(r); },
                [&](const Polynomial& p) { return perp.initial_coordinates(k - 1, p); }));
        }
    }
    auto sum = [&](const CoordinateMatrix& a, const CoordinateMatrix& b, int sign) {
        RationalMatrixBuilder out(a.rows, a.cols);
        for (std::size_t r = 0; r < a.rows; ++r) {
            for (const auto& [c, v] : a.data[r]) out.add(r, c, v);
            for (const auto& [c, v] : b.data[r]) out.add(r, c, sign > 0 ? v : mpq_class(-v));
        }
        return std::move(out).build();
    };

    AnticommutativityReport report;
    // Row convention: applying delta_{k+1} then delta_k is the product M_{k+1} * M_k.
    for (int k = 0; k <= kTopDegree - 1; ++k) {
        bool ok = true;
        if (k >= 1) {
            for (int v = 0; v < nu && ok; ++v) {
                for (int w = v + 1; w < nu && ok; ++w) {
                    auto lhs = sum(multiply(full[k + 1][v], initial[k][w], q), multiply(full[k + 1][w], initial[k][v], q), -1);
                    auto rhs = sum(multiply(initial[k + 1][v], full[k][w], q), multiply(initial[k + 1][w], full[k][v], q), -1);
                    ok = is_zero_matrix(sum(lhs, rhs, +1), q);
                }
            }
        }
        if (!ok) {
            report.ok = false;
            report.failing_levels.push_back(k);
        }
    }
    return report;
}

bool anticommutativity_check(int n) { return anticommutativity_report(n).ok; }

ExteriorElement phi_element(int n, int i, int j, int k) {
    if (!(1 <= i && i < j && j < k && k <= n)) throw DomainError("phi needs 1 <= i < j < k <= n");
    Grid g{n};
    auto e = [&](int row, int col) { return static_cast<int>(grid_variable(row, col, n)); };
    ExteriorElement x;
    x.add_ordered({e(2, i), e(2, j), e(2, k)}, g.y(1, i) * g.y(1, j) * g.y(1, k), 1);
    x.add_ordered({e(1, k), e(2, i), e(2, k)}, g.y(1, i) * g.y(1, j) * g.y(2, j), -1);
    x.add_ordered({e(1, j), e(2, i), e(2, j)}, g.y(1, i) * g.y(1, k) * g.y(2, k), 1);
    x.add_ordered({e(1, j), e(1, k), e(2, k)}, g.y(1, i) * g.y(2, i) * g.y(2, j), 1);
    x.add_ordered({e(1, j), e(1, k), e(2, j)}, g.y(1, i) * g.y(2, i) * g.y(2, k), 1);
    x.add_ordered({e(1, i), e(2, i), e(2, j)}, g.y(1, j) * g.y(1, k) * g.y(2, k), 1);
    x.add_ordered({e(1, i), e(1, k), e(2, i)}, g.y(1, j) * g.y(2, j) * g.y(2, k), -1);
    x.add_ordered({e(1, i), e(1, j), e(1, k)}, g.y(2, i) * g.y(2, j) * g.y(2, k), 1);
    return x;
}

ExteriorElement psi_element(int n, int i, int j, int k) {
    if (!(1 <= i && i < j && j < k && k <= n)) throw DomainError("psi needs 1 <= i < j < k <= n");
    Grid g{n};
    auto e = [&](int row, int col) { return static_cast<int>(grid_variable(row, col, n)); };
    ExteriorElement x;
    auto add = [&](std::vector<int> wedge, const Polynomial& p, int sign) {
        for (const auto& [u, c] : p.terms()) x.add_ordered(wedge, u, sign * c);
    };
    auto mono = [](const Monomial& u) { return Polynomial::term(u, 1); };
    add({e(2, i), e(2, j), e(2, k)}, mono(g.y(1, i) * g.y(1, j) * g.y(1, k)), 1);
    add({e(1, k), e(2, i), e(2, k)}, binding_quadric(n, i, j).times(g.y(1, j)), -1);
    add({e(1, j), e(2, i), e(2, j)}, binding_quadric(n, i, k).times(g.y(1, k)), 1);
    add({e(1, j), e(1, k), e(2, k)}, binding_quadric(n, i, j).times(g.y(2, i)), 1);
    add({e(1, j), e(1, k), e(2, j)}, binding_quadric(n, i, k).times(g.y(2, i)), 1);
    add({e(1, i), e(2, i), e(2, j)}, binding_quadric(n, j, k).times(g.y(1, k)), 1);
    add({e(1, i), e(1, k), e(2, i)}, binding_quadric(n, j, k).times(g.y(2, j)), -1);
    add({e(1, i), e(1, j), e(1, k)}, mono(g.y(2, i) * g.y(2, j) * g.y(2, k)), 1);
    return x;
}

PsiReport psi_vanishing_report(int n) {
    PsiReport report;
    if (n < 2) throw DomainError("psi check needs n >= 2");
    if (n < 3) return report;
    PerpComplexes perp(n);
    const int nu = 2 * n;
    auto in = permanental_initial_ideal(n);
    std::vector<Polynomial> monomial_gens;
    for (auto g : in.generators()) monomial_gens.push_back(Polynomial::term(Monomial::from_mask(g), 1));
    DualQuotient initial_dual(monomial_gens, nu, 4, Grading::fine(nu));

    auto fail = [&](int i, int j, int k, const std::string& what) {
        if (report.ok) {
            report.ok = false;
            report.failure = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "): " + what;
        }
    };
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                ++report.triples;
                auto phi = phi_element(n, i, j, k);
                auto psi = psi_element(n, i, j, k);
                if (!(perp.initial_to_full(3, phi) == psi)) fail(i, j, k, "psi is not the basis transfer of phi");
                if (!dual_koszul_differential(phi, nu).is_zero()) fail(i, j, k, "phi is not a cycle");
                if (is_bgg_boundary(initial_dual, phi, 3)) fail(i, j, k, "phi is a boundary");
                if (!dual_koszul_differential(psi, nu).is_zero()) fail(i, j, k, "the differential does not vanish on psi");
            }
        }
    }
    return report;
}

bool psi_vanishing_check(int n) { return psi_vanishing_report(n).ok; }

} // namespace permres
