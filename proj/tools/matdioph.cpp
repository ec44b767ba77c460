// matdioph: command-line front end for parsing, evaluation, reductions,
// bounded search, verification and the dimension lattice.
//
// Exit codes: 0 success / satisfiable, 1 unsatisfiable within bounds or failed
// verification, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI/CLI.hpp>

#include <matdioph/matdioph.hpp>

namespace {

using namespace matdioph;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::size_t n = 0;
    std::string domain = "nat";
    std::int64_t bound = 1;
    std::size_t pin_index = 1;
    std::size_t d = 0;
    unsigned threads = 1;
    bool json = false;
    std::size_t limit = 0;
    std::string ceiling = "1000000000";
    bool first = false;
    std::string mode;
    std::vector<std::string> substructure;

    std::string poly, system, witness, f, matrix, out, coeffs, kind, solution, parameter = "E";
    std::size_t max = 8;
    std::int64_t prime = 2;
};

struct Outcome {
    int code = 0;
    json data;
    std::string text;
};

// ---------------------------------------------------------------------------
// Input helpers

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

/// Inline JSON when the argument starts with '[' or '{', a file path otherwise.
json json_arg(const std::string& arg) {
    const auto start = arg.find_first_not_of(" \t\n");
    const std::string text = start != std::string::npos && (arg[start] == '[' || arg[start] == '{') ? arg : read_file(arg);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

NCPolynomial poly_arg(const std::string& text) {
    return text.find('=') != std::string::npos ? parse_equation(text) : parse_poly(text);
}

EquationSystem load_system(const Options& o) {
    if (!o.system.empty() && !o.poly.empty()) throw UsageError("give either --system or --poly, not both");
    if (!o.system.empty()) return parse_system(read_file(o.system));
    if (!o.poly.empty()) return EquationSystem::from_equations({poly_arg(o.poly)});
    throw UsageError("an equation system is required (--system FILE or --poly TEXT)");
}

Witness load_witness(const Options& o, bool domain_given) {
    if (o.witness.empty()) throw UsageError("--witness is required");
    Witness w = witness_from_json(json_arg(o.witness));
    if (domain_given) w.domain = parse_domain(o.domain);
    return w;
}

ExactMatrix load_matrix(const Options& o) {
    if (o.matrix.empty()) throw UsageError("--matrix is required");
    return matrix_from_json(json_arg(o.matrix));
}

std::size_t require_n(const Options& o) {
    if (o.n == 0) throw UsageError("--n is required and must be at least 1");
    return o.n;
}

/// "x=3,y=2" or a JSON object {"x": 3, "y": 2}.
ScalarSolution parse_solution(const std::string& text) {
    ScalarSolution out;
    if (!text.empty() && text.front() == '{') {
        for (const auto& [k, v] : json_arg(text).items()) out.insert_or_assign(VarSymbol(k), numerator(numeral_from_json(v)));
        return out;
    }
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("solution entries look like name=value, got '" + item + "'");
        auto trim = [](std::string t) {
            t.erase(0, t.find_first_not_of(' '));
            t.erase(t.find_last_not_of(' ') + 1);
            return t;
        };
        out.insert_or_assign(VarSymbol(trim(item.substr(0, eq))), parse_bigint(trim(item.substr(eq + 1))));
    }
    return out;
}

std::vector<Rational> parse_coeffs(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        out.push_back(parse_rational(item));
    }
    return out;
}

json names(const std::vector<VarSymbol>& vars) {
    json out = json::array();
    for (const auto& v : vars) out.push_back(v.name());
    return out;
}

std::string matrix_text(const ExactMatrix& m) { return to_json(m)["entries"].dump(); }

// ---------------------------------------------------------------------------
// Commands

Outcome cmd_parse(const Options& o) {
    Outcome r;
    if (!o.poly.empty() && o.system.empty()) {
        const NCPolynomial p = poly_arg(o.poly);
        r.text = to_string(p) + "\n";
        r.data = {{"normal_form", to_string(p)},
                  {"degree", p.degree()},
                  {"homogeneous", p.is_homogeneous()},
                  {"zero_free_term", p.has_zero_free_term()},
                  {"variables", names(p.variables())}};
        return r;
    }
    const EquationSystem sys = load_system(o);
    r.text = to_string(sys);
    json eqs = json::array();
    for (const auto& e : sys.equations()) eqs.push_back(to_string(e));
    r.data = {{"system", r.text}, {"varlist", names(sys.varlist())}, {"equations", eqs}};
    return r;
}

Outcome cmd_eval(const Options& o, bool domain_given) {
    const EquationSystem sys = load_system(o);
    const Witness w = load_witness(o, domain_given);
    Outcome r;
    json values = json::array();
    std::ostringstream text;
    for (std::size_t k = 0; k < sys.size(); ++k) {
        const ExactMatrix v = eval_poly(sys.equations()[k], w);
        values.push_back(to_json(v));
        text << to_string(sys.equations()[k]) << " -> " << matrix_text(v) << "\n";
    }
    r.text = text.str();
    r.data = {{"values", values}};
    return r;
}

Outcome cmd_verify(const Options& o, bool domain_given) {
    const EquationSystem sys = load_system(o);
    const Witness w = load_witness(o, domain_given);
    const VerifyReport report = verify_witness(sys, w);
    Outcome r;
    json residuals = json::array();
    std::ostringstream text;
    text << (report.pass ? "pass" : "fail") << "\n";
    for (std::size_t k = 0; k < report.residuals.size(); ++k) {
        residuals.push_back(to_json(report.residuals[k]));
        if (!report.residuals[k].is_zero())
            text << "equation " << k + 1 << " (" << to_string(sys.equations()[k]) << "): residual "
                 << matrix_text(report.residuals[k]) << "\n";
    }
    for (const auto& v : report.domain_violations) text << "domain violation: " << v << " not in " << to_string(w.domain) << "\n";
    r.text = text.str();
    r.data = {{"pass", report.pass}, {"residuals", residuals}, {"domain_violations", report.domain_violations}};
    r.code = report.pass ? 0 : 1;
    return r;
}

/// System output plus sidecar, either to stdout or to PATH and PATH.json.
Outcome emit_reduction(const Options& o, const std::string& body, json sidecar) {
    Outcome r;
    if (!o.out.empty()) {
        write_file(o.out, body);
        write_file(o.out + ".json", sidecar.dump(2) + "\n");
        r.text = "wrote " + o.out + "\nwrote " + o.out + ".json\n";
        r.data = {{"out", o.out}, {"sidecar_path", o.out + ".json"}, {"sidecar", sidecar}};
    } else {
        r.text = body + "# sidecar: " + sidecar.dump() + "\n";
        r.data = {{"output", body}, {"sidecar", sidecar}};
    }
    return r;
}

json pin_json(const PinSymbols& pin) { return {{"y", pin.y.name()}, {"swaps", names(pin.swaps)}}; }

Outcome cmd_reduce_embed(const Options& o, bool domain_given) {
    if (o.f.empty()) throw UsageError("--f is required");
    const ScalarEquation f = ScalarEquation::parse(o.f);
    const std::size_t n = require_n(o);
    detail::check_index(n, o.pin_index, "pin index");
    const ScalarEmbedding e = embed_scalar_equation(f, n);
    json varmap = json::object();
    for (const auto& [s, m] : e.varmap) varmap[s.name()] = m.name();
    json sidecar = {{"kind", "lemma-embed"}, {"varmap", varmap}, {"n", n}, {"pin_index", o.pin_index}, {"pin", pin_json(e.pin)}};
    if (!o.solution.empty()) {
        const Domain domain = domain_given ? parse_domain(o.domain) : Domain::Nat;
        sidecar["witness"] = to_json(witness_from_scalar(parse_solution(o.solution), f, n, o.pin_index, domain));
    }
    return emit_reduction(o, to_string(e.system), sidecar);
}

Outcome cmd_reduce_tilde(const Options& o) {
    if (o.f.empty()) throw UsageError("--f is required");
    const ScalarEquation f = ScalarEquation::parse(o.f);
    const VarSymbol e(o.parameter);
    const NCPolynomial t = tilde_transform(f, e);
    std::vector<VarSymbol> vars{e};
    json varmap = json::object();
    for (const auto& [s, m] : matrix_names(f)) {
        varmap[s.name()] = m.name();
        vars.push_back(m);
    }
    const EquationSystem sys({t}, vars);
    json sidecar = {{"kind", "tilde"}, {"varmap", varmap}, {"n", nullptr}, {"pin_index", nullptr}, {"parameter", e.name()}};
    return emit_reduction(o, to_string(sys), sidecar);
}

Outcome cmd_reduce_split(const Options& o) {
    if (o.d == 0) throw UsageError("--d is required and must be at least 1");
    const EquationSystem sys = load_system(o);
    const SplitSystem s = basis_split(sys, o.d);
    json varmap = json::object();
    for (const auto& [v, pieces] : s.parts) varmap[v.name()] = names(pieces);
    json sidecar = {{"kind", "split"}, {"varmap", varmap}, {"n", nullptr}, {"pin_index", nullptr}, {"d", o.d}};
    if (!o.witness.empty()) {
        const Witness w = load_witness(o, false);
        if (!verify_witness(sys, w).pass) throw InvalidWitnessError("witness does not satisfy the input system");
        sidecar["basis"] = "squares";
        sidecar["n"] = w.n;
        sidecar["witness"] = to_json(split_witness(w, s, squares_basis()));
    }
    return emit_reduction(o, to_string(s.system), sidecar);
}

Outcome cmd_reduce_embedding(const Options& o, bool delta) {
    const Witness w = load_witness(o, false);
    Witness out;
    if (delta) {
        if (o.d == 0) throw UsageError("--d (number of diagonal blocks) is required");
        out = delta_embed(w, o.d);
    } else {
        out = gamma_embed(w, require_n(o));
    }
    json varmap = json::object();
    for (const auto& [v, m] : w.assignment) varmap[v.name()] = v.name();
    json sidecar = {{"kind", delta ? "delta" : "gamma"}, {"varmap", varmap}, {"n", out.n}, {"pin_index", nullptr}};
    if (!o.system.empty() || !o.poly.empty()) {
        const EquationSystem sys = load_system(o);
        sidecar["verified"] = verify_witness(sys, out).pass;
    }
    return emit_reduction(o, to_json(out).dump(2) + "\n", sidecar);
}

Outcome cmd_reduce_pin(const Options& o) {
    const std::size_t n = require_n(o);
    detail::check_index(n, o.pin_index, "pin index");
    std::set<VarSymbol> taken;
    const PinSymbols pin = pin_symbols(n, taken);
    json sidecar = {{"kind", "pin"},
                    {"varmap", json::object()},
                    {"n", n},
                    {"pin_index", o.pin_index},
                    {"pin", pin_json(pin)},
                    {"witness", to_json(pin_witness(n, o.pin_index))}};
    return emit_reduction(o, to_string(diag_pin_system(n)), sidecar);
}

Outcome cmd_solve(const Options& o) {
    const EquationSystem sys = load_system(o);
    SearchSpec spec;
    spec.n = o.n == 0 ? 1 : o.n;
    spec.domain = parse_domain(o.domain);
    spec.bound = o.bound;
    spec.limit = o.first ? 1 : o.limit;
    spec.threads = o.threads;
    spec.ceiling = parse_bigint(o.ceiling);
    for (const auto& c : o.substructure) {
        const auto eq = c.find('=');
        if (eq == std::string::npos) throw UsageError("--substructure takes VAR=PATTERN, got '" + c + "'");
        spec.constraints.insert_or_assign(VarSymbol(c.substr(0, eq)), parse_substructure(c.substr(eq + 1)));
    }
    SearchResult result;
    if (o.mode.empty()) {
        result = solve_bounded(sys, spec);
    } else {
        if (sys.size() != 1) throw UsageError("--mode needs a single polynomial");
        spec.vars = sys.varlist();
        const NontrivialMode mode = o.mode == "h" ? NontrivialMode::Homogeneous : NontrivialMode::FreeTermZero;
        result = solve_nontrivial_bounded(sys.equations()[0], spec, mode);
    }
    Outcome r;
    json witnesses = json::array();
    std::ostringstream text;
    for (const auto& w : result.witnesses) {
        witnesses.push_back(to_json(w));
        text << json{{"witness", to_json(w)}}.dump() << "\n";
    }
    const json summary = {{"count", result.witnesses.size()},
                          {"space_size", numeral_to_json(Rational(result.space_size))},
                          {"steps", result.steps},
                          {"truncated", result.truncated}};
    text << json{{"summary", summary}}.dump() << "\n";
    r.text = text.str();
    r.data = {{"witnesses", witnesses}, {"summary", summary}};
    r.code = result.witnesses.empty() ? 1 : 0;
    return r;
}

Outcome poly_outcome(const UniPoly& p) {
    Outcome r;
    r.text = to_string(p) + "\n";
    r.data = {{"poly", to_json(p)}, {"text", to_string(p)}, {"degree", p.degree()}};
    return r;
}

Outcome cmd_analyze_eisenstein(const Options& o) {
    UniPoly p;
    if (!o.coeffs.empty()) {
        p = UniPoly(parse_coeffs(o.coeffs));
    } else if (!o.matrix.empty()) {
        p = char_poly(load_matrix(o));
    } else if (o.n != 0) {
        p = xn_minus_2(o.n);
    } else {
        throw UsageError("give --coeffs, --matrix (characteristic polynomial) or --n (X^n - 2)");
    }
    const bool result = eisenstein_check(p, BigInt(o.prime));
    Outcome r;
    r.text = std::string(result ? "true" : "false") + "\n";
    r.data = {{"poly", to_json(p)}, {"text", to_string(p)}, {"prime", o.prime}, {"eisenstein", result}};
    return r;
}

Outcome cmd_analyze_scalar(const Options& o) {
    const ExactMatrix a = load_matrix(o);
    const bool direct = is_scalar_direct(a);
    const bool via = is_scalar_via_commutation(a);
    Outcome r;
    r.text = "direct: " + std::string(direct ? "true" : "false") + "\nvia commutation: " + (via ? "true" : "false") + "\n";
    r.data = {{"direct", direct}, {"via_commutation", via}, {"agree", direct == via}};
    return r;
}

Outcome cmd_analyze_substructure(const Options& o) {
    if (o.kind.empty()) throw UsageError("--kind is required (diag, upper, sigma:i, gamma:i, lambda:i, rect:i, rrect:i)");
    const SubstructureSpec s = parse_substructure(o.kind);
    std::optional<ExactMatrix> a;
    if (!o.matrix.empty()) a = load_matrix(o);
    const std::size_t n = a ? a->n() : require_n(o);
    if (s.indexed()) detail::check_index(n, s.index, "substructure");
    Outcome r;
    json pattern = json::array();
    std::ostringstream text;
    for (std::size_t row = 1; row <= n; ++row) {
        std::string line;
        for (std::size_t col = 1; col <= n; ++col) line += forced_zero(s, n, row, col) ? '0' : '*';
        pattern.push_back(line);
        text << line << "\n";
    }
    r.data = {{"kind", to_string(s)}, {"n", n}, {"pattern", pattern}};
    if (a) {
        const bool member = in_substructure(*a, s);
        r.data["member"] = member;
        text << "member: " << (member ? "true" : "false") << "\n";
    }
    r.text = text.str();
    return r;
}

Outcome cmd_lattice(const Options& o) {
    if (o.max == 0) throw UsageError("--max must be at least 1");
    Outcome r;
    json table = json::array();
    std::ostringstream text;
    text << "n\\m";
    for (std::size_t m = 1; m <= o.max; ++m) text << ' ' << m;
    text << "\n";
    bool agrees = true;
    std::size_t verified = 0;
    for (std::size_t n = 1; n <= o.max; ++n) {
        json row = json::array();
        text << n << "  ";
        const EquationSystem sys({parse_equation("X^" + std::to_string(n) + " = 2")}, {VarSymbol("X")});
        for (std::size_t m = 1; m <= o.max; ++m) {
            const bool cell = xn2_solvable(n, m);
            agrees = agrees && cell == (m % n == 0);
            row.push_back(cell);
            text << ' ' << (cell ? '1' : '0');
            if (auto w = xn2_witness<Rational>(n, m)) {
                Witness witness{m, Domain::Nat, {{VarSymbol("X"), *w}}};
                if (verify_witness(sys, witness).pass) ++verified;
                else agrees = false;
            }
        }
        table.push_back(row);
        text << "\n";
    }
    text << "witnesses verified: " << verified << "\n";
    r.text = text.str();
    r.data = {{"max", o.max}, {"table", table}, {"divisibility", agrees}, {"witnesses_verified", verified}};
    r.code = agrees ? 0 : 1;
    return r;
}

// ---------------------------------------------------------------------------
// Config echo

json config_of(const CLI::App* leaf, const std::string& command) {
    json opts = json::object();
    for (const CLI::Option* opt : leaf->get_options()) {
        if (opt->get_lnames().empty() || opt->get_lnames().front() == "help") continue;
        const std::string name = opt->get_lnames().front();
        if (opt->get_expected_max() == 0) {
            opts[name] = opt->count() > 0;
        } else if (opt->count() > 0) {
            const auto& res = opt->results();
            if (opt->get_expected_max() > 1) opts[name] = res;
            else opts[name] = res.back();
        } else if (opt->get_expected_max() > 1) {
            opts[name] = json::array();
        } else if (!opt->get_default_str().empty()) {
            opts[name] = opt->get_default_str();
        }
    }
    return {{"command", command}, {"options", opts}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix Diophantine toolkit: non-commutative polynomial systems over M_n(N)"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    Options o;

    auto add_system = [&](CLI::App* c) {
        c->add_option("--system", o.system, "equation system file");
        c->add_option("--poly", o.poly, "single polynomial or equation");
    };
    auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "emit a JSON envelope"); };
    auto add_domain = [&](CLI::App* c) {
        c->add_option("--domain", o.domain, "entry domain")->check(CLI::IsMember({"nat", "int", "rat"}));
    };

    auto* parse = app.add_subcommand("parse", "parse and normalize a polynomial or system");
    add_system(parse);
    add_json(parse);

    auto* eval = app.add_subcommand("eval", "evaluate a polynomial or system at a witness");
    add_system(eval);
    eval->add_option("--witness", o.witness, "witness JSON (file or inline)");
    add_domain(eval);
    add_json(eval);

    auto* verify = app.add_subcommand("verify", "verify a witness against a system");
    add_system(verify);
    verify->add_option("--witness", o.witness, "witness JSON (file or inline)");
    add_domain(verify);
    add_json(verify);

    auto* reduce = app.add_subcommand("reduce", "reductions between equation classes");
    reduce->require_subcommand(1);
    auto* embed = reduce->add_subcommand("lemma-embed", "embed a scalar equation into M_n(N)");
    embed->add_option("--f", o.f, "scalar polynomial in commuting variables");
    embed->add_option("--n", o.n, "matrix dimension");
    embed->add_option("--pin-index", o.pin_index, "pinning index for the witness");
    embed->add_option("--solution", o.solution, "scalar solution, e.g. x=3,y=2");
    add_domain(embed);
    embed->add_option("--out", o.out, "output path (writes PATH and PATH.json)");
    add_json(embed);
    auto* tilde = reduce->add_subcommand("tilde", "insert a parameter around every letter");
    tilde->add_option("--f", o.f, "scalar polynomial");
    tilde->add_option("--parameter", o.parameter, "parameter variable name");
    tilde->add_option("--out", o.out, "output path");
    add_json(tilde);
    auto* split = reduce->add_subcommand("split", "replace each variable by a sum of d variables");
    add_system(split);
    split->add_option("--d", o.d, "multiplicity");
    split->add_option("--witness", o.witness, "witness of the input system to transport (squares basis)");
    split->add_option("--out", o.out, "output path");
    add_json(split);
    auto* delta = reduce->add_subcommand("delta", "block-diagonal embedding of a witness");
    delta->add_option("--witness", o.witness, "witness JSON");
    delta->add_option("--d", o.d, "number of diagonal blocks");
    add_system(delta);
    delta->add_option("--out", o.out, "output path");
    add_json(delta);
    auto* gamma = reduce->add_subcommand("gamma", "corner embedding of a witness");
    gamma->add_option("--witness", o.witness, "witness JSON");
    gamma->add_option("--n", o.n, "target dimension");
    add_system(gamma);
    gamma->add_option("--out", o.out, "output path");
    add_json(gamma);
    auto* pin = reduce->add_subcommand("pin", "system forcing Y to be an elementary diagonal matrix");
    pin->add_option("--n", o.n, "matrix dimension");
    pin->add_option("--pin-index", o.pin_index, "index of the witness");
    pin->add_option("--out", o.out, "output path");
    add_json(pin);

    auto* solve = app.add_subcommand("solve", "bounded exhaustive search for witnesses");
    add_system(solve);
    solve->add_option("--n", o.n, "matrix dimension");
    solve->add_option("--domain", o.domain, "entry domain")->check(CLI::IsMember({"nat", "int", "rat"}));
    solve->add_option("--bound", o.bound, "largest absolute entry")->check(CLI::NonNegativeNumber);
    solve->add_option("--limit", o.limit, "stop after this many witnesses (0: all)");
    solve->add_flag("--first", o.first, "stop at the first witness");
    solve->add_option("--ceiling", o.ceiling, "largest admissible search space");
    solve->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    solve->add_option("--mode", o.mode, "exclude the zero assignment: h (homogeneous) or f (no free term)")
        ->check(CLI::IsMember({"h", "f"}));
    solve->add_option("--substructure", o.substructure, "zero pattern for a variable, VAR=PATTERN");
    add_json(solve);

    auto* analyze = app.add_subcommand("analyze", "matrix and polynomial invariants");
    analyze->require_subcommand(1);
    auto* charpoly = analyze->add_subcommand("charpoly", "characteristic polynomial");
    charpoly->add_option("--matrix", o.matrix, "matrix JSON (file or inline)");
    add_json(charpoly);
    auto* minpoly = analyze->add_subcommand("minpoly", "minimal polynomial");
    minpoly->add_option("--matrix", o.matrix, "matrix JSON (file or inline)");
    add_json(minpoly);
    auto* eis = analyze->add_subcommand("eisenstein", "Eisenstein criterion at a prime");
    eis->add_option("--coeffs", o.coeffs, "coefficients low to high, comma separated");
    eis->add_option("--matrix", o.matrix, "use the characteristic polynomial of this matrix");
    eis->add_option("--n", o.n, "use X^n - 2");
    eis->add_option("--prime", o.prime, "prime");
    add_json(eis);
    auto* scalar = analyze->add_subcommand("scalar", "scalar test, direct and via commutation");
    scalar->add_option("--matrix", o.matrix, "matrix JSON (file or inline)");
    add_json(scalar);
    auto* sub = analyze->add_subcommand("substructure", "zero pattern and membership");
    sub->add_option("--kind,--substructure", o.kind, "diag, upper, sigma:i, gamma:i, lambda:i, rect:i, rrect:i");
    sub->add_option("--n", o.n, "dimension");
    sub->add_option("--matrix", o.matrix, "matrix to test");
    add_json(sub);

    auto* lattice = app.add_subcommand("lattice", "solvability of X^n = 2 in M_m(N)");
    lattice->add_option("--max", o.max, "largest n and m");
    add_json(lattice);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help() << "\npolynomial grammar:\n" << kGrammarHelp;
        return 2;
    }

    const CLI::App* leaf = &app;
    std::string command;
    while (!leaf->get_subcommands().empty()) {
        leaf = leaf->get_subcommands().front();
        command += (command.empty() ? "" : " ") + leaf->get_name();
    }
    const json config = config_of(leaf, command);
    auto given = [&](const char* name) { return leaf->count(name) > 0; };

    Outcome r;
    try {
        const bool domain_given = leaf->get_option_no_throw("--domain") && given("--domain");
        if (leaf == parse) r = cmd_parse(o);
        else if (leaf == eval) r = cmd_eval(o, domain_given);
        else if (leaf == verify) r = cmd_verify(o, domain_given);
        else if (leaf == embed) r = cmd_reduce_embed(o, domain_given);
        else if (leaf == tilde) r = cmd_reduce_tilde(o);
        else if (leaf == split) r = cmd_reduce_split(o);
        else if (leaf == delta) r = cmd_reduce_embedding(o, true);
        else if (leaf == gamma) r = cmd_reduce_embedding(o, false);
        else if (leaf == pin) r = cmd_reduce_pin(o);
        else if (leaf == solve) r = cmd_solve(o);
        else if (leaf == charpoly) r = poly_outcome(char_poly(load_matrix(o)));
        else if (leaf == minpoly) r = poly_outcome(min_poly(load_matrix(o)));
        else if (leaf == eis) r = cmd_analyze_eisenstein(o);
        else if (leaf == scalar) r = cmd_analyze_scalar(o);
        else if (leaf == sub) r = cmd_analyze_substructure(o);
        else if (leaf == lattice) r = cmd_lattice(o);
    } catch (const std::exception& e) {
        const std::string message = e.what();
        if (o.json) std::cout << json{{"ok", false}, {"error", message}, {"config", config}}.dump() << "\n";
        std::cerr << "error: " << message << "\n";
        if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const UsageError*>(&e))
            std::cerr << "\n" << leaf->help() << "\npolynomial grammar:\n" << kGrammarHelp;
        return 2;
    }

    if (o.json) {
        std::cout << json{{"ok", r.code == 0}, {"data", r.data}, {"config", config}}.dump() << "\n";
    } else {
        std::cout << "# config: " << config.dump() << "\n" << r.text;
    }
    return r.code;
}
