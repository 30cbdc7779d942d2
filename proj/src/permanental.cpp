#include "permres/permanental.hpp"

#include "permres/errors.hpp"
#include "permres/monomial_order.hpp"

namespace permres {

namespace {

void require_closed_form_range(int n) {
    if (n < 3) throw DomainError("closed forms are stated for n >= 3");
}

Polynomial grid_quadric(int n, int i, int j, int sign) {
    Polynomial p;
    p.add_term(Monomial::variable(grid_variable(1, i, n)) * Monomial::variable(grid_variable(2, j, n)), 1);
    p.add_term(Monomial::variable(grid_variable(1, j, n)) * Monomial::variable(grid_variable(2, i, n)), sign);
    return p;
}

VertexSet bit(int row, int col, int n) { return VertexSet{1} << grid_variable(row, col, n); }

mpz_class power_of_two(long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

/// sum_{w=3}^{floor(m/2)} 2^{m-2w} C(n,w) C(n-w,m-2w) C(w-1,2)
mpz_class weight_sum(int n, int m) {
    mpz_class s = 0;
    for (int w = 3; 2 * w <= m; ++w) s += power_of_two(m - 2 * w) * binomial(n, w) * binomial(n - w, m - 2 * w) * binomial(w - 1, 2);
    return s;
}

mpz_class row_two_bracket(int n, int k) {
    return 2 * binomial(n, k + 2) - binomial(2 * n, k + 2) + binomial(n + 1, 2) * binomial(2 * n - 2, k) -
           2 * binomial(n, 2) * binomial(2 * n - 3, k - 1);
}

} // namespace

PermanentalFamily permanental_generators(int n) {
    if (n < 2) throw DomainError("permanental ideal needs n >= 2");
    PermanentalFamily family{n, {}};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) family.generators.push_back(grid_quadric(n, i, j, 1));
    return family;
}

std::vector<Polynomial> determinantal_generators(int n) {
    if (n < 2) throw DomainError("determinantal ideal needs n >= 2");
    std::vector<Polynomial> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) gens.push_back(grid_quadric(n, i, j, -1));
    return gens;
}

mpz_class binomial(long a, long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return c;
}

mpz_class closed_form_entry(int n, int i, int j) {
    require_closed_form_range(n);
    mpz_class value = 0;
    if (i == 0 && j == 0) value = 1;
    else if (i == 1 && j == 2) value = binomial(n, 2);
    else if (i >= 1 && j == i + 2) value = row_two_bracket(n, i) + weight_sum(n, i + 2);
    else if (i >= 1 && j == i + 3) value = weight_sum(n, i + 3);
    if (value < 0)
        throw InternalError("closed form b_{" + std::to_string(i) + "," + std::to_string(j) + "} is negative for n = " +
                            std::to_string(n));
    return value;
}

BettiTable closed_form_betti(int n) {
    require_closed_form_range(n);
    BettiTable table;
    for (int i = 0; i <= 2 * n; ++i) {
        for (int r = 0; r <= 3; ++r) {
            mpz_class v = closed_form_entry(n, i, i + r);
            if (!v.fits_ulong_p()) throw DomainError("Betti number exceeds 64 bits");
            table.set(i, i + r, v.get_ui());
        }
    }
    return table;
}

mpz_class third_row_initial(int n, int k) {
    require_closed_form_range(n);
    if (k < 0) throw DomainError("homological degree must be nonnegative");
    return weight_sum(n, k + 3);
}

mpz_class second_row_difference(int n, int k) {
    require_closed_form_range(n);
    if (k < 2) throw DomainError("second-row difference needs k >= 2");
    return row_two_bracket(n, k);
}

FVector f_vector_closed_form(int n) {
    require_closed_form_range(n);
    std::vector<mpz_class> f{1, 2 * n, 2 * binomial(n, 2) + binomial(n + 1, 2), 2 * binomial(n, 3) + 2 * binomial(n, 2)};
    for (int k = 3; k <= n - 1; ++k) f.push_back(2 * binomial(n, k + 1));
    FVector out;
    for (const auto& v : f) out.counts.push_back(v.get_ui());
    return out;
}

std::vector<mpz_class> f_polynomial(int n) {
    require_closed_form_range(n);
    std::vector<mpz_class> c(static_cast<std::size_t>(n + 1), 0);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] += 2 * binomial(n, k);
    c[static_cast<std::size_t>(n)] -= 1;
    c[static_cast<std::size_t>(n - 2)] += binomial(n + 1, 2);
    c[static_cast<std::size_t>(n - 3)] += 2 * binomial(n, 2);
    return c;
}

SimplicialComplex delta_complex(int n) {
    if (n < 2) throw DomainError("the complex needs n >= 2");
    std::vector<VertexSet> facets(2, 0);
    for (int c = 1; c <= n; ++c) {
        facets[0] |= bit(1, c, n);
        facets[1] |= bit(2, c, n);
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            facets.push_back(bit(1, i, n) | bit(2, i, n) | bit(2, j, n));
            facets.push_back(bit(1, i, n) | bit(1, j, n) | bit(2, j, n));
        }
    }
    return {2 * n, std::move(facets)};
}

SquarefreeMonomialIdeal permanental_initial_ideal(int n) {
    if (n < 2) throw DomainError("permanental ideal needs n >= 2");
    std::vector<VertexSet> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) gens.push_back(bit(1, i, n) | bit(2, j, n));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                gens.push_back(bit(1, i, n) | bit(2, j, n) | bit(2, k, n));
                gens.push_back(bit(1, i, n) | bit(1, j, n) | bit(2, k, n));
            }
        }
    }
    return {2 * n, std::move(gens)};
}

SubsetKey column_pattern_key(int n) {
    return [n](VertexSet sigma) {
        std::uint64_t key = 0;
        for (int c = n; c >= 1; --c) {
            std::uint64_t code = ((sigma & bit(1, c, n)) ? 1u : 0u) | ((sigma & bit(2, c, n)) ? 2u : 0u);
            if (code) key = key * 4 + code;
        }
        return key;
    };
}

BettiTable permanental_hochster_table(int n, HochsterOptions options) {
    options.symmetry_key = column_pattern_key(n);
    return hochster_betti_table(permanental_initial_ideal(n), options);
}

} // namespace permres
