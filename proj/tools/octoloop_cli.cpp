// Command-line front end: table export, expression evaluation, apparatus
// word tracing, the verification suites, witness enumeration and the sign
// solver. Data goes to standard output (or --out), diagnostics to standard
// error; the exit code is 0 exactly when the command fully succeeded.

#include <octoloop/apparatus.hpp>
#include <octoloop/cayley_dickson.hpp>
#include <octoloop/expr.hpp>
#include <octoloop/loop16.hpp>
#include <octoloop/octonion.hpp>
#include <octoloop/table_document.hpp>
#include <octoloop/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace octoloop;

int emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return 1;
    }
    out << payload;
    return out.good() ? 0 : 1;
}

int run_table(std::size_t dim, const std::string& format, const std::string& out_path) {
    TableDocument doc;
    try {
        doc = make_table_document(dim);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::string payload;
    if (format == "text")
        payload = to_text(doc);
    else if (format == "csv")
        payload = to_csv(doc);
    else if (format == "json")
        payload = to_json(doc);
    else {
        std::cerr << "error: unsupported format '" << format << "'\n";
        return 1;
    }
    return emit(payload, out_path);
}

int run_eval(const std::string& src, bool strict, const std::string& out_path) {
    try {
        const ExprPtr ast = parse(src, strict);
        return emit(to_string(eval_ast(*ast)) + "\n", out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_wordcmd(const std::vector<std::string>& names, bool trace, const std::string& out_path) {
    std::vector<BasisIndex> word;
    for (const std::string& n : names) {
        const auto parsed = parse_basis_name(n);
        if (!parsed || parsed->negative || parsed->index == BasisIndex::one) {
            std::cerr << "error: unknown generator '" << n
                      << "' (expected one of i, j, k, L, Li, Lj, Lk)\n";
            return 1;
        }
        word.push_back(parsed->index);
    }
    const RunResult r = run_word(word, trace);
    std::string payload;
    if (trace) {
        for (std::size_t step = 0; step < r.trace.size(); ++step) {
            const std::string op =
                step == 0 ? "start" : std::string(basis_name(word[step - 1]));
            payload += trace_line(step, op, r.trace[step]) + "\n";
        }
    }
    payload += name(r.final) + "\n";
    return emit(payload, out_path);
}

// Convention files hold one line per generator: "<name> <8 sign bits>",
// classes ordered 1, i, j, k, L, Li, Lj, Lk. See `solve-encoding` for the
// shipped values.
bool load_convention(const std::string& path, SignConvention& conv, std::string& err) {
    std::ifstream in(path);
    if (!in) {
        err = "cannot open '" + path + "'";
        return false;
    }
    std::array<bool, 7> seen{};
    std::string gen, bits;
    while (in >> gen >> bits) {
        std::size_t gi = 7;
        for (std::size_t g = 0; g < 7; ++g)
            if (gen == basis_name(kGenerators[g]))
                gi = g;
        if (gi == 7 || bits.size() != 8) {
            err = "bad convention line: " + gen + " " + bits;
            return false;
        }
        for (std::size_t cls = 0; cls < 8; ++cls) {
            if (bits[cls] != '0' && bits[cls] != '1') {
                err = "bad sign bits for " + gen;
                return false;
            }
            conv.base_sign[gi][cls] = bits[cls] == '1' ? 1 : 0;
        }
        seen[gi] = true;
    }
    for (std::size_t g = 0; g < 7; ++g) {
        if (!seen[g]) {
            err = "convention file is missing generator " +
                  std::string(basis_name(kGenerators[g]));
            return false;
        }
    }
    return true;
}

int run_verify(int max_word_len, std::uint64_t seed, const std::string& convention_path,
               const std::string& out_path) {
    if (max_word_len < 1) {
        std::cerr << "error: --max-word-len must be at least 1\n";
        return 1;
    }
    SignConvention conv = default_convention();
    if (!convention_path.empty()) {
        std::string err;
        if (!load_convention(convention_path, conv, err)) {
            std::cerr << "error: " << err << "\n";
            return 1;
        }
    }
    const auto suites = verify_default_suites(max_word_len, seed, conv);
    std::string payload;
    bool all_pass = true;
    for (const SuiteResult& s : suites) {
        payload += s.name + ": " + (s.pass ? "pass" : "FAIL") + " (" + s.detail + ")\n";
        if (!s.pass) {
            all_pass = false;
            std::cerr << "counterexample in " << s.name << ": " << s.detail << "\n";
        }
    }
    const int rc = emit(payload, out_path);
    return rc != 0 ? rc : (all_pass ? 0 : 1);
}

int run_witness(const std::string& kind, const std::string& out_path) {
    std::ostringstream os;
    if (kind == "associator") {
        std::size_t count = 0;
        for (const BasisIndex a : kGenerators) {
            for (const BasisIndex b : kGenerators) {
                for (const BasisIndex c : kGenerators) {
                    const Octonion v = associator(embed({a, false}), embed({b, false}),
                                                  embed({c, false}));
                    if (v.is_zero())
                        continue;
                    ++count;
                    os << "(" << basis_name(a) << ", " << basis_name(b) << ", "
                       << basis_name(c) << ") -> " << to_string(v) << "\n";
                }
            }
        }
        os << "total: " << count << " of 343 triples have a nonzero associator\n";
        return emit(os.str(), out_path);
    }
    if (kind == "zero-divisor") {
        const auto pair = find_zero_divisor(16, 1);
        if (!pair) {
            std::cerr << "error: no dim-16 zero divisor found\n";
            return 1;
        }
        const CDElement product = cd_mul(pair->x, pair->y);
        os << "dim 16 zero divisor:\n";
        os << "  x = " << cd_to_string(pair->x) << "\n";
        os << "  y = " << cd_to_string(pair->y) << "\n";
        os << "  x*y = " << cd_to_string(product) << (product.is_zero() ? " (replay exact)" : "")
           << "\n";
        return emit(os.str(), out_path);
    }
    std::cerr << "error: unknown witness kind '" << kind
              << "' (expected associator or zero-divisor)\n";
    return 1;
}

bool parse_predicate_spec(const std::string& spec, ReversalPredicate& out) {
    out = ReversalPredicate{};
    if (spec == "never")
        return true;
    std::stringstream ss(spec);
    std::string term;
    while (std::getline(ss, term, '^')) {
        if (term == "always")
            out.always = !out.always;
        else if (term == "pointing_up" || term == "pu")
            out.pointing_up = !out.pointing_up;
        else if (term == "flag_right" || term == "fr")
            out.flag_right = !out.flag_right;
        else if (term == "black_arrowhead" || term == "ba")
            out.black_arrowhead = !out.black_arrowhead;
        else
            return false;
    }
    return true;
}

int run_solve(const std::vector<std::string>& overrides, const std::string& out_path) {
    ReversalPredicates preds = reversal_predicates();
    for (const std::string& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: --predicate-override expects <generator>=<predicate>\n";
            return 1;
        }
        std::string gen = ov.substr(0, eq);
        for (char& ch : gen)
            ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        std::size_t gi = 7;
        for (std::size_t g = 0; g < 7; ++g) {
            std::string nm(basis_name(kGenerators[g]));
            for (char& ch : nm)
                ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            if (nm == gen)
                gi = g;
        }
        if (gi == 7) {
            std::cerr << "error: unknown generator '" << ov.substr(0, eq) << "'\n";
            return 1;
        }
        if (!parse_predicate_spec(ov.substr(eq + 1), preds[gi])) {
            std::cerr << "error: bad predicate '" << ov.substr(eq + 1)
                      << "' (terms: pointing_up, flag_right, black_arrowhead, always, never; "
                         "join with '^')\n";
            return 1;
        }
    }

    const auto conventions = solve_signs(preds);
    std::ostringstream os;
    for (std::size_t n = 0; n < conventions.size(); ++n) {
        os << "convention " << (n + 1);
        if (conventions[n] == default_convention())
            os << " (default)";
        os << ":\n";
        for (std::size_t gi = 0; gi < 7; ++gi) {
            os << "  " << basis_name(kGenerators[gi]) << ": base_sign=";
            for (const auto bit : conventions[n].base_sign[gi])
                os << static_cast<int>(bit);
            os << " reversal=" << preds[gi].str() << "\n";
        }
    }
    os << "consistent conventions: " << conventions.size() << "\n";
    const int rc = emit(os.str(), out_path);
    if (rc != 0)
        return rc;
    if (conventions.empty()) {
        std::cerr << "error: no consistent sign convention; the transcribed rules are "
                     "inconsistent\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact octonion arithmetic and the hoop-ribbon-flag apparatus"};
    app.require_subcommand(1);

    std::string out_path;

    auto* table = app.add_subcommand("table", "emit a basis multiplication table");
    std::size_t dim = 8;
    std::string format = "text";
    table->add_option("--dim", dim, "table dimension: 4, 8 or 16")->capture_default_str();
    table->add_option("--format", format, "output format: text, csv or json")
        ->capture_default_str();
    table->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* eval = app.add_subcommand("eval", "evaluate an octonion expression");
    std::string expr_src;
    bool strict = false;
    eval->add_option("expr", expr_src, "expression, e.g. \"(L*j)*k\"")->required();
    eval->add_flag("--strict-parens", strict, "reject unparenthesized triple products");
    eval->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* word = app.add_subcommand("word", "run a generator word on the apparatus");
    std::vector<std::string> gen_names;
    bool trace = false;
    word->add_option("generators", gen_names, "generator names from i j k L Li Lj Lk");
    word->add_flag("--trace", trace, "print every intermediate state");
    word->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    int max_word_len = 6;
    std::uint64_t seed = 42;
    std::string convention_path;
    verify->add_option("--max-word-len", max_word_len, "word sweep length bound")
        ->capture_default_str();
    verify->add_option("--seed", seed, "seed for the random suites")->capture_default_str();
    verify->add_option("--convention", convention_path,
                       "sign-convention file to verify instead of the shipped default");
    verify->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* witness = app.add_subcommand("witness", "list non-associativity witnesses");
    std::string kind = "associator";
    witness->add_option("kind", kind, "associator or zero-divisor")->required();
    witness->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* solve = app.add_subcommand("solve-encoding", "search for consistent sign conventions");
    std::vector<std::string> overrides;
    solve->add_option("--predicate-override", overrides,
                      "replace a generator's reversal predicate, e.g. Lj=always");
    solve->add_option("--out", out_path, "write output to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*table)
            return run_table(dim, format, out_path);
        if (*eval)
            return run_eval(expr_src, strict, out_path);
        if (*word)
            return run_wordcmd(gen_names, trace, out_path);
        if (*verify)
            return run_verify(max_word_len, seed, convention_path, out_path);
        if (*witness)
            return run_witness(kind, out_path);
        if (*solve)
            return run_solve(overrides, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
