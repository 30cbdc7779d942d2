// Command-line front end: Betti tables by several routes, Groebner and
// Hilbert checks, Alexander duality and the BGG lemma checks.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "permres/bgg.hpp"
#include "permres/errors.hpp"
#include "permres/family.hpp"
#include "permres/groebner.hpp"
#include "permres/io.hpp"
#include "permres/koszul.hpp"
#include "permres/perp_basis.hpp"
#include "permres/permanental.hpp"
#include "permres/stanley_reisner.hpp"

using namespace permres;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kDisagree = 2, kInvalid = 3, kInternal = 4 };

const std::vector<std::string> kMethods = {"closed", "hochster", "koszul", "bgg"};

struct Config {
    std::optional<int> n;
    std::string ideal_path;
    std::string methods = "closed";
    std::string primes;
    std::string format = "text";
    int jobs = 1;
    std::optional<int> trunc;
    bool verify = false;
    bool show_initial = false;
    int i = 0;
    int j = 0;
    std::string side = "out";
};

std::vector<std::string> split_methods(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream s(text);
    for (std::string m; std::getline(s, m, ',');) {
        if (m.empty()) continue;
        if (std::find(kMethods.begin(), kMethods.end(), m) == kMethods.end())
            throw DomainError("unknown method '" + m + "'");
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    if (out.empty()) throw DomainError("no method selected");
    return out;
}

std::vector<PrimeField> primes_of(const Config& c) {
    return c.primes.empty() ? default_primes() : parse_prime_list(c.primes);
}

OracleOptions oracle_options(const Config& c) { return {primes_of(c), c.jobs}; }

HochsterOptions hochster_options(const Config& c) {
    HochsterOptions o;
    o.primes = primes_of(c);
    o.jobs = c.jobs;
    return o;
}

int family_size(const Config& c) {
    if (!c.n) throw DomainError("this command needs --n");
    if (*c.n < 2) throw DomainError("--n must be at least 2");
    return *c.n;
}

IdealSpec load_ideal(const Config& c) {
    if (c.ideal_path.empty()) throw DomainError("this command needs --n or --ideal");
    auto spec = read_ideal_file(c.ideal_path);
    if (spec.generators.empty()) throw DomainError("the ideal has no nonzero generators");
    return spec;
}

SquarefreeMonomialIdeal require_squarefree(const IdealSpec& spec) {
    auto ideal = as_squarefree_monomial_ideal(spec);
    if (!ideal) throw DomainError("this route needs an ideal generated by squarefree monomials");
    return *ideal;
}

/// The given generators as a Groebner basis under the first order that works.
GeneratingSet groebner_basis_of(const IdealSpec& spec) {
    int nu = spec.layout.variable_count;
    std::vector<MonomialOrder> orders = {MonomialOrder::lex(nu), MonomialOrder::graded_lex(nu)};
    if (spec.layout.grid_columns) {
        int n = *spec.layout.grid_columns;
        orders.push_back(diagonal_order(n));
        if (n >= 2) orders.push_back(antidiagonal_order(n));
    }
    for (const auto& order : orders) {
        GeneratingSet g(spec.generators, order);
        if (is_groebner_basis(g)) return g;
    }
    throw DomainError("the generators are not a Groebner basis for lex, graded lex or the grid orders; "
                      "supply a Groebner basis or use --method bgg");
}

int default_max_row(const Config& c, const IdealSpec& spec) {
    if (c.trunc) {
        if (*c.trunc < 1) throw DomainError("--trunc must be positive");
        return *c.trunc;
    }
    if (as_squarefree_monomial_ideal(spec)) return std::max(spec.layout.variable_count - 1, 1);
    return 4;
}

void check_variable_limit(const IdealSpec& spec) {
    if (spec.layout.variable_count > 24) throw DomainError("the homology routes support at most 24 variables");
}

BettiTable family_table(const std::string& method, int n, const Config& c) {
    if (method == "closed") return closed_form_betti(n);
    if (method == "hochster") return permanental_hochster_table(n, hochster_options(c));
    if (method == "koszul") return permanental_koszul_table(n, oracle_options(c));
    return permanental_bgg_table(n, oracle_options(c));
}

BettiTable ideal_table(const std::string& method, const IdealSpec& spec, const Config& c) {
    int nu = spec.layout.variable_count;
    if (method == "closed") throw DomainError("the closed form applies only to --n");
    if (method == "hochster") return hochster_betti_table(require_squarefree(spec), hochster_options(c));
    check_variable_limit(spec);
    int rows = default_max_row(c, spec);
    Grading grading = choose_grading(spec.generators, nu, spec.layout.grid_columns);
    if (method == "koszul") {
        GradedQuotientRing q(groebner_basis_of(spec), nu, rows + 1, grading);
        return koszul_tor_betti(q, nu, nu + rows, oracle_options(c), rows);
    }
    for (const auto& g : spec.generators)
        if (!g.is_homogeneous()) throw DomainError("the BGG route needs homogeneous generators");
    DualQuotient dual(spec.generators, nu, rows + 1, grading);
    return bgg_betti_table(dual, nu, rows, oracle_options(c));
}

void print_tables(const Config& c, const VariableLayout& layout,
                  const std::vector<std::pair<std::string, BettiTable>>& tables, const std::string& verdict,
                  const std::vector<std::string>& notes) {
    if (c.format == "json") {
        json out;
        for (const auto& [m, t] : tables) out["tables"][m] = json::parse(betti_to_json(t, layout));
        if (!verdict.empty()) out["verdict"] = verdict;
        if (!notes.empty()) out["notes"] = notes;
        std::cout << out.dump(2) << "\n";
        return;
    }
    if (c.format == "csv") {
        std::cout << "method,i,j,b\n";
        for (const auto& [m, t] : tables)
            for (const auto& [k, b] : t.entries()) std::cout << m << "," << k.first << "," << k.second << "," << b << "\n";
        return;
    }
    for (const auto& [m, t] : tables) {
        if (tables.size() > 1) std::cout << "[" << m << "]\n";
        std::cout << (c.format == "m2" ? render_betti_m2(t) : render_betti_text(t));
        if (tables.size() > 1) std::cout << "\n";
    }
    for (const auto& note : notes) std::cout << "note: " << note << "\n";
    if (!verdict.empty()) std::cout << verdict << "\n";
}

int cmd_betti(const Config& c) {
    auto methods = split_methods(c.methods);
    std::vector<std::pair<std::string, BettiTable>> tables;
    VariableLayout layout;
    if (c.n) {
        int n = family_size(c);
        layout = VariableLayout::grid(n);
        for (const auto& m : methods) tables.emplace_back(m, family_table(m, n, c));
    } else {
        auto spec = load_ideal(c);
        layout = spec.layout;
        for (const auto& m : methods) tables.emplace_back(m, ideal_table(m, spec, c));
    }
    std::string verdict;
    std::vector<std::string> notes;
    bool agree = true;
    for (std::size_t k = 1; k < tables.size(); ++k) {
        if (tables[k].second == tables[0].second) continue;
        agree = false;
        notes.push_back(tables[k].first + " differs from " + tables[0].first + " at " +
                        describe_difference(tables[k].second, tables[0].second));
        if (c.n && (tables[k].first == "hochster" || tables[0].first == "hochster")) {
            const auto& raw = tables[k].first == "hochster" ? tables[k].second : tables[0].second;
            const auto& other = tables[k].first == "hochster" ? tables[0].second : tables[k].second;
            if (cancellation_pairs(raw, other))
                notes.push_back("hochster reports R/in(P), which exceeds R/P by consecutive cancellations only");
        }
    }
    if (tables.size() > 1) verdict = agree ? "AGREE" : "DISAGREE";
    print_tables(c, layout, tables, verdict, notes);
    return agree ? kOk : kDisagree;
}

int cmd_gb(const Config& c) {
    int n = family_size(c);
    auto layout = VariableLayout::grid(n);
    auto g = permanental_gb(n);
    std::cout << "generators (" << g.size() << "):\n";
    for (const auto& f : g.generators()) std::cout << "  " << format_polynomial(f, layout, &g.order()) << "\n";
    int status = kOk;
    if (c.verify) {
        auto report = check_groebner(g);
        if (report.ok()) {
            std::cout << "OK, " << g.size() << " generators (" << report.pairs_checked << " S-pairs, "
                      << report.pairs_skipped_coprime << " skipped as coprime)\n";
        } else {
            std::cout << "FAIL: " << report.failure << "\n";
            status = kDisagree;
        }
    }
    if (c.show_initial) {
        auto in = initial_ideal(g);
        std::size_t quadrics = 0, cubics = 0;
        for (const auto& m : in.generators()) (m.degree() == 2 ? quadrics : cubics)++;
        std::cout << "initial ideal: " << quadrics << " quadratic + " << cubics << " cubic monomials\n";
        for (const auto& m : in.generators()) std::cout << "  " << format_monomial(m, layout) << "\n";
    }
    return status;
}

std::string series_text(const std::vector<mpz_class>& coefficients) {
    std::string out;
    for (std::size_t d = 0; d < coefficients.size(); ++d) {
        if (d > 0) out += " ";
        out += coefficients[d].get_str();
    }
    return out;
}

int cmd_hilbert(const Config& c) {
    int trunc = c.trunc.value_or(10);
    if (trunc < 0) throw DomainError("--trunc must be nonnegative");
    std::optional<InitialIdeal> initial;
    std::optional<SimplicialComplex> delta;
    int nu = 0;
    if (c.n) {
        int n = family_size(c);
        nu = 2 * n;
        initial = initial_ideal(permanental_gb(n));
        delta = delta_complex(n);
    } else {
        auto spec = load_ideal(c);
        nu = spec.layout.variable_count;
        if (auto sq = as_squarefree_monomial_ideal(spec)) delta = complex_from_ideal(*sq);
        initial = initial_ideal(groebner_basis_of(spec));
    }
    std::vector<mpz_class> counted;
    for (int d = 0; d <= trunc; ++d) counted.emplace_back(static_cast<unsigned long>(hilbert_function(*initial, d, nu)));
    std::vector<mpz_class> from_faces;
    if (delta) from_faces = hilbert_series_from_f(*delta, trunc);
    bool agree = !delta || from_faces == counted;
    auto numerator = hilbert_numerator(counted, nu, trunc);
    if (c.format == "json") {
        json out;
        auto as_strings = [](const std::vector<mpz_class>& v) {
            std::vector<std::string> s;
            for (const auto& x : v) s.push_back(x.get_str());
            return s;
        };
        out["variables"] = nu;
        out["hilbert_function"] = as_strings(counted);
        out["numerator"] = as_strings(numerator);
        if (delta) out["from_f_vector"] = as_strings(from_faces);
        out["verdict"] = agree ? "AGREE" : "DISAGREE";
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "hilbert function (standard monomials): " << series_text(counted) << "\n";
        if (delta) std::cout << "hilbert function (f-vector):         " << series_text(from_faces) << "\n";
        std::cout << "numerator of (1-t)^" << nu << " HS: " << series_text(numerator) << "\n";
        if (delta) std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return agree ? kOk : kDisagree;
}

std::string ideal_text(const SquarefreeMonomialIdeal& ideal, const VariableLayout& layout) {
    if (ideal.generators().empty()) return "<0>";
    std::string out = "<";
    bool first = true;
    for (auto g : ideal.generators()) {
        if (!first) out += ", ";
        first = false;
        out += format_monomial(Monomial::from_mask(g), layout);
    }
    return out + ">";
}

int cmd_dual(const Config& c) {
    VariableLayout layout;
    std::optional<SquarefreeMonomialIdeal> ideal;
    if (c.n) {
        int n = family_size(c);
        layout = VariableLayout::grid(n);
        ideal = permanental_initial_ideal(n);
    } else {
        auto spec = load_ideal(c);
        layout = spec.layout;
        ideal = require_squarefree(spec);
    }
    auto dual = ideal_from_complex(alexander_dual(complex_from_ideal(*ideal)));
    auto mono = monomialization(*ideal);
    auto decomposition = primary_decomposition(*ideal);
    std::cout << "ideal: " << ideal_text(*ideal, layout) << "\n";
    std::cout << "alexander dual: " << ideal_text(dual, layout) << "\n";
    std::cout << "primary decomposition:";
    for (auto comp : decomposition.components) {
        std::string p = "(";
        for (int v = 0; v < ideal->variable_count(); ++v)
            if (comp >> v & 1) p += (p.size() > 1 ? ", " : "") + format_variable(static_cast<VarIndex>(v), layout);
        std::cout << " " << p << ")";
    }
    std::cout << "\n";
    bool ok = dual == mono && decomposition_matches(decomposition, *ideal);
    std::cout << "monomialization equals dual: " << (dual == mono ? "yes" : "no") << "\n";
    if (ideal->variable_count() <= 24) {
        auto check = regularity_pdim_dual(*ideal, hochster_options(c));
        std::cout << "reg(I) = " << check.regularity_of_ideal << ", pdim(R/I_dual) = " << check.pdim_of_dual_quotient
                  << (check.holds() ? " OK" : " MISMATCH") << "\n";
        ok = ok && check.holds();
    }
    return ok ? kOk : kDisagree;
}

int cmd_bggcheck(const Config& c) {
    int n = family_size(c);
    auto anti = anticommutativity_report(n);
    if (anti.ok) {
        std::cout << "ANTICOMMUTE OK (k=0..4)\n";
    } else {
        std::cout << "ANTICOMMUTE FAIL (k=";
        for (std::size_t k = 0; k < anti.failing_levels.size(); ++k)
            std::cout << (k ? "," : "") << anti.failing_levels[k];
        std::cout << ")\n";
    }
    auto psi = psi_vanishing_report(n);
    if (psi.ok)
        std::cout << "PSI OK (" << psi.triples << " triples)\n";
    else
        std::cout << "PSI FAIL: " << psi.failure << "\n";
    return anti.ok && psi.ok ? kOk : kDisagree;
}

int cmd_dump(const Config& c) {
    auto methods = split_methods(c.methods);
    if (methods.size() != 1 || (methods[0] != "koszul" && methods[0] != "bgg"))
        throw DomainError("dump needs --method koszul or --method bgg");
    if (c.side != "in" && c.side != "out") throw DomainError("--side must be in or out");
    RationalMatrix m;
    if (methods[0] == "koszul") {
        std::optional<GradedQuotientRing> q;
        int degree = c.j - c.i + 1;
        if (degree < 0) throw DomainError("need j >= i - 1");
        if (c.n) {
            q.emplace(permanental_quotient(family_size(c), std::max(degree, 1)));
        } else {
            auto spec = load_ideal(c);
            check_variable_limit(spec);
            q.emplace(groebner_basis_of(spec), spec.layout.variable_count, std::max(degree, 1),
                      choose_grading(spec.generators, spec.layout.variable_count, spec.layout.grid_columns));
        }
        auto piece = koszul_piece(*q, c.i, c.j);
        m = c.side == "in" ? piece.incoming : piece.outgoing;
    } else {
        std::optional<DualQuotient> dual;
        int degree = std::max(c.j - c.i + 1, 1);
        if (c.n) {
            dual.emplace(permanental_dual(family_size(c), degree));
        } else {
            auto spec = load_ideal(c);
            check_variable_limit(spec);
            dual.emplace(spec.generators, spec.layout.variable_count, degree,
                         choose_grading(spec.generators, spec.layout.variable_count, spec.layout.grid_columns));
        }
        auto piece = bgg_piece(*dual, c.i, c.j);
        m = c.side == "in" ? piece.incoming : piece.outgoing;
    }
    if (c.primes.empty()) {
        write_matrix_market(std::cout, m);
    } else {
        auto field = parse_prime_list(c.primes).front();
        write_matrix_market(std::cout, reduce_matrix(m, field), field);
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded Betti numbers of permanental and squarefree monomial ideals"};
    app.require_subcommand(1);
    Config c;

    auto add_source = [&](CLI::App* sub) {
        sub->add_option("--n", c.n, "number of columns of the 2 x n matrix");
        sub->add_option("--ideal", c.ideal_path, "ideal JSON file")->check(CLI::ExistingFile);
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--prime", c.primes, "prime(s) for rank computations, comma separated");
        sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* betti = app.add_subcommand("betti", "Betti table by one or more methods");
    add_source(betti);
    add_common(betti);
    betti->add_option("--method", c.methods, "comma separated subset of closed,hochster,koszul,bgg");
    betti->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv", "m2"}));
    betti->add_option("--trunc", c.trunc, "largest row for the Koszul and BGG routes on file ideals");

    auto* gb = app.add_subcommand("gb", "permanental Groebner basis");
    gb->add_option("--n", c.n, "number of columns")->required();
    gb->add_flag("--verify", c.verify, "check S-pairs and reducedness");
    gb->add_flag("--show-initial", c.show_initial, "list the minimal generators of the initial ideal");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of R/I");
    add_source(hilbert);
    hilbert->add_option("--trunc", c.trunc, "largest degree (default 10)");
    hilbert->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));

    auto* dual = app.add_subcommand("dual", "Alexander dual and primary decomposition");
    add_source(dual);
    add_common(dual);

    auto* bggcheck = app.add_subcommand("bggcheck", "anticommutativity and psi-vanishing checks");
    bggcheck->add_option("--n", c.n, "number of columns")->required();

    auto* dump = app.add_subcommand("dump", "write one differential as a MatrixMarket matrix");
    add_source(dump);
    dump->add_option("--prime", c.primes, "reduce modulo this prime instead of writing rationals");
    dump->add_option("--method", c.methods, "koszul or bgg")->required();
    dump->add_option("--i", c.i, "homological degree (koszul) or exterior degree (bgg)")->required();
    dump->add_option("--j", c.j, "internal degree (koszul) or total degree s (bgg)")->required();
    dump->add_option("--side", c.side, "in or out");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        for (auto* sub : {betti, hilbert, dual, dump})
            if (sub->parsed() && c.n && !c.ideal_path.empty()) throw DomainError("give either --n or --ideal, not both");
        if (betti->parsed()) return cmd_betti(c);
        if (gb->parsed()) return cmd_gb(c);
        if (hilbert->parsed()) return cmd_hilbert(c);
        if (dual->parsed()) return cmd_dual(c);
        if (bggcheck->parsed()) return cmd_bggcheck(c);
        return cmd_dump(c);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
}
