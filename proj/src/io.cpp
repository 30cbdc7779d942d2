#include "permres/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "permres/errors.hpp"

namespace permres {

using nlohmann::json;

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    std::string digits() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::string(text_.substr(start, pos_ - start));
    }
    long small_number() {
        auto d = digits();
        if (d.size() > 6) fail("number out of range");
        return std::stol(d);
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

VarIndex parse_variable(Cursor& in, const VariableLayout& layout) {
    in.expect('x');
    in.expect('[');
    long first = in.small_number();
    long index = 0;
    if (in.accept(',')) {
        long col = in.small_number();
        if (!layout.grid_columns) in.fail("x[r,c] needs a 2 x n grid layout");
        if (first < 1 || first > 2 || col < 1 || col > *layout.grid_columns) in.fail("grid variable out of range");
        index = grid_variable(static_cast<int>(first), static_cast<int>(col), *layout.grid_columns);
    } else {
        if (first < 1 || first > layout.variable_count) in.fail("variable index out of range");
        index = first - 1;
    }
    in.expect(']');
    return static_cast<VarIndex>(index);
}

Monomial parse_power_product(Cursor& in, const VariableLayout& layout) {
    std::vector<int> e(static_cast<std::size_t>(layout.variable_count), 0);
    do {
        VarIndex v = parse_variable(in, layout);
        long power = 1;
        if (in.accept('^')) power = in.small_number();
        e[v] += static_cast<int>(power);
        if (e[v] > 0xffff) in.fail("exponent too large");
    } while (in.accept('*'));
    return Monomial::from_exponents(e);
}

json layout_json(const VariableLayout& layout) {
    if (layout.grid_columns) return json{{"rows", 2}, {"cols", *layout.grid_columns}};
    return layout.variable_count;
}

VariableLayout layout_from_json(const json& j) {
    if (j.is_number_integer()) {
        int nu = j.get<int>();
        if (nu < 1 || nu > 64) throw DomainError("variable count must lie in 1..64");
        return VariableLayout::generic(nu);
    }
    if (j.is_object()) {
        if (j.value("rows", 2) != 2) throw DomainError("only 2-row grids are supported");
        int n = j.at("cols").get<int>();
        if (n < 1 || n > 32) throw DomainError("grid column count must lie in 1..32");
        return VariableLayout::grid(n);
    }
    throw DomainError("\"variables\" must be an integer or {\"rows\": 2, \"cols\": n}");
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("invalid JSON: ") + e.what());
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

Monomial parse_monomial(std::string_view text, const VariableLayout& layout) {
    Cursor in(text);
    if (in.accept('1')) {
        if (!in.done()) in.fail("trailing input");
        return Monomial{};
    }
    Monomial m = parse_power_product(in, layout);
    if (!in.done()) in.fail("trailing input");
    return m;
}

Polynomial parse_polynomial(std::string_view text, const VariableLayout& layout) {
    Cursor in(text);
    Polynomial f;
    bool first = true;
    if (in.done()) in.fail("empty polynomial");
    while (!in.done()) {
        int sign = 1;
        if (in.accept('-')) {
            sign = -1;
        } else if (!in.accept('+') && !first) {
            in.fail("expected '+' or '-'");
        }
        first = false;
        mpq_class c = 1;
        bool has_coefficient = false;
        if (in.at_digit()) {
            mpz_class num(in.digits()), den = 1;
            if (in.accept('/')) den = mpz_class(in.digits());
            if (sgn(den) == 0) in.fail("zero denominator");
            c = mpq_class(num, den);
            c.canonicalize();
            has_coefficient = true;
        }
        Monomial m;
        if (!has_coefficient || in.accept('*')) m = parse_power_product(in, layout);
        f.add_term(m, sign * c);
    }
    return f;
}

std::string format_variable(VarIndex v, const VariableLayout& layout) {
    if (layout.grid_columns) {
        int n = *layout.grid_columns;
        return "x[" + std::to_string(v / n + 1) + "," + std::to_string(v % n + 1) + "]";
    }
    return "x[" + std::to_string(v + 1) + "]";
}

std::string format_monomial(const Monomial& m, const VariableLayout& layout) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& f : m.factors()) {
        if (!out.empty()) out += "*";
        out += format_variable(f.var, layout);
        if (f.exp > 1) out += "^" + std::to_string(f.exp);
    }
    return out;
}

std::string format_polynomial(const Polynomial& f, const VariableLayout& layout, const MonomialOrder* order) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Monomial, mpq_class>> terms(f.terms().begin(), f.terms().end());
    if (order)
        std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return order->greater(a.first, b.first); });
    std::string out;
    for (const auto& [m, c] : terms) {
        mpq_class a = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        if (m.is_one()) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += format_monomial(m, layout);
        }
    }
    return out;
}

namespace {

IdealSpec parse_ideal_json_unchecked(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("variables") || !j.contains("generators"))
        throw DomainError("ideal JSON needs \"variables\" and \"generators\"");
    IdealSpec spec{layout_from_json(j.at("variables")), {}};
    for (const auto& g : j.at("generators")) {
        if (!g.is_string()) throw DomainError("generators must be strings");
        Polynomial f = parse_polynomial(g.get<std::string>(), spec.layout);
        if (!f.is_zero()) spec.generators.push_back(std::move(f));
    }
    return spec;
}

} // namespace

IdealSpec parse_ideal_json(const std::string& text) {
    try {
        return parse_ideal_json_unchecked(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed JSON document: ") + e.what());
    }
}

IdealSpec read_ideal_file(const std::string& path) { return parse_ideal_json(slurp(path)); }

std::string ideal_to_json(const IdealSpec& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.generators) gens.push_back(format_polynomial(g, ideal.layout));
    return json{{"variables", layout_json(ideal.layout)}, {"generators", gens}}.dump(2);
}

std::optional<SquarefreeMonomialIdeal> as_squarefree_monomial_ideal(const IdealSpec& ideal) {
    if (ideal.layout.variable_count > 64) return std::nullopt;
    std::vector<VertexSet> masks;
    for (const auto& g : ideal.generators) {
        if (g.size() != 1) return std::nullopt;
        const Monomial& m = g.terms().begin()->first;
        if (!m.is_squarefree()) return std::nullopt;
        masks.push_back(m.support_mask());
    }
    return SquarefreeMonomialIdeal(ideal.layout.variable_count, std::move(masks));
}

std::vector<Polynomial> monomial_generators(const SquarefreeMonomialIdeal& ideal) {
    std::vector<Polynomial> out;
    for (auto g : ideal.generators()) out.push_back(Polynomial::term(Monomial::from_mask(g), 1));
    return out;
}

namespace {

SimplicialComplex parse_complex_json_unchecked(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw DomainError("complex JSON needs \"vertices\" and \"facets\"");
    int nu = j.at("vertices").get<int>();
    if (nu < 0 || nu > 63) throw DomainError("vertex count must lie in 0..63");
    std::vector<VertexSet> facets;
    for (const auto& f : j.at("facets")) {
        VertexSet mask = 0;
        for (const auto& v : f) {
            int i = v.get<int>();
            if (i < 0 || i >= nu) throw DomainError("vertex " + std::to_string(i) + " out of range");
            mask |= VertexSet{1} << i;
        }
        facets.push_back(mask);
    }
    return SimplicialComplex(nu, std::move(facets));
}

} // namespace

SimplicialComplex parse_complex_json(const std::string& text) {
    try {
        return parse_complex_json_unchecked(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed JSON document: ") + e.what());
    }
}

std::string complex_to_json(const SimplicialComplex& delta) {
    json facets = json::array();
    for (auto f : delta.facets()) {
        json face = json::array();
        for (int v = 0; v < delta.vertex_count(); ++v)
            if (f >> v & 1) face.push_back(v);
        facets.push_back(face);
    }
    return json{{"vertices", delta.vertex_count()}, {"facets", facets}}.dump();
}

std::string betti_to_json(const BettiTable& table, const VariableLayout& layout) {
    json entries = json::array();
    for (const auto& [ij, b] : table.entries()) entries.push_back({{"i", ij.first}, {"j", ij.second}, {"b", b}});
    json j;
    if (layout.grid_columns) {
        j["rows"] = 2;
        j["cols"] = *layout.grid_columns;
    } else {
        j["variables"] = layout.variable_count;
    }
    j["entries"] = entries;
    j["pdim"] = table.projective_dimension();
    j["reg"] = table.regularity();
    return j.dump(2);
}

namespace {

BettiTable betti_from_json_unchecked(const std::string& text) {
    json j = parse_json(text);
    BettiTable t;
    for (const auto& e : j.at("entries")) t.set(e.at("i").get<int>(), e.at("j").get<int>(), e.at("b").get<std::uint64_t>());
    return t;
}

} // namespace

BettiTable betti_from_json(const std::string& text) {
    try {
        return betti_from_json_unchecked(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed JSON document: ") + e.what());
    }
}

std::string render_betti_m2(const BettiTable& table) {
    int pd = std::max(table.projective_dimension(), 0);
    int reg = std::max(table.regularity(), 0);
    std::vector<std::vector<std::string>> cells;
    auto row_of = [&](const std::string& label, auto value) {
        std::vector<std::string> r{label};
        for (int i = 0; i <= pd; ++i) r.push_back(value(i));
        cells.push_back(std::move(r));
    };
    row_of("", [](int i) { return std::to_string(i); });
    row_of("total:", [&](int i) { return std::to_string(table.total(i)); });
    for (int r = 0; r <= reg; ++r)
        row_of(std::to_string(r) + ":", [&](int i) {
            auto b = table.get(i, i + r);
            return b == 0 ? std::string(".") : std::to_string(b);
        });
    std::vector<std::size_t> width(static_cast<std::size_t>(pd) + 2, 0);
    for (const auto& r : cells)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::string out;
    for (const auto& r : cells) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c > 0) line += ' ';
            line += std::string(width[c] - r[c].size(), ' ') + r[c];
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string render_betti_text(const BettiTable& table) {
    return render_betti_m2(table) + "pdim: " + std::to_string(table.projective_dimension()) +
           "\nreg: " + std::to_string(table.regularity()) + "\n";
}

std::string render_betti_csv(const BettiTable& table) {
    std::string out = "i,j,b\n";
    for (const auto& [ij, b] : table.entries())
        out += std::to_string(ij.first) + "," + std::to_string(ij.second) + "," + std::to_string(b) + "\n";
    return out;
}

} // namespace permres
