#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permres/betti_table.hpp"
#include "permres/monomial_order.hpp"
#include "permres/polynomial.hpp"
#include "permres/simplicial.hpp"
#include "permres/stanley_reisner.hpp"

namespace permres {

/// How variables are named in text: x[r,c] on a 2 x n grid, or x[i] with
/// 1-based i.
struct VariableLayout {
    int variable_count = 0;
    std::optional<int> grid_columns;

    static VariableLayout generic(int variable_count) { return {variable_count, std::nullopt}; }
    static VariableLayout grid(int n) { return {2 * n, n}; }
};

Monomial parse_monomial(std::string_view text, const VariableLayout& layout);
/// Terms separated by + or -, each an optional rational coefficient followed
/// by '*'-separated variable powers, e.g. "x[1,2]*x[2,1] - 3/2*x[1,1]^2".
Polynomial parse_polynomial(std::string_view text, const VariableLayout& layout);

std::string format_variable(VarIndex v, const VariableLayout& layout);
std::string format_monomial(const Monomial& m, const VariableLayout& layout);
/// Terms in decreasing order under `order` (structural order when absent).
std::string format_polynomial(const Polynomial& f, const VariableLayout& layout,
                              const MonomialOrder* order = nullptr);

struct IdealSpec {
    VariableLayout layout;
    std::vector<Polynomial> generators;
};

/// {"variables": nu or {"rows": 2, "cols": n}, "generators": [...]}.
IdealSpec parse_ideal_json(const std::string& text);
IdealSpec read_ideal_file(const std::string& path);
std::string ideal_to_json(const IdealSpec& ideal);

/// The squarefree monomial ideal the generators span, when every generator
/// is a single squarefree monomial.
std::optional<SquarefreeMonomialIdeal> as_squarefree_monomial_ideal(const IdealSpec& ideal);
std::vector<Polynomial> monomial_generators(const SquarefreeMonomialIdeal& ideal);

/// {"vertices": nu, "facets": [[v, ...], ...]} with 0-based vertices.
SimplicialComplex parse_complex_json(const std::string& text);
std::string complex_to_json(const SimplicialComplex& delta);

std::string betti_to_json(const BettiTable& table, const VariableLayout& layout);
BettiTable betti_from_json(const std::string& text);

/// Macaulay2-style tally: a "total:" row, then row r lists b_{i,i+r}.
std::string render_betti_m2(const BettiTable& table);
/// The tally followed by pdim and reg.
std::string render_betti_text(const BettiTable& table);
/// "i,j,b" lines with a header.
std::string render_betti_csv(const BettiTable& table);

} // namespace permres
