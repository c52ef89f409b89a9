#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "dompoly/coeffs.hpp"
#include "dompoly/equivalence.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/poly.hpp"
#include "dompoly/verify.hpp"

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

int parse_order(const std::string& value, const std::string& kind) {
    try {
        std::size_t used = 0;
        int n = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return n;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad order '" + value + "' in " + kind + " spec");
    }
}

dompoly::Graph parse_one_spec(const std::string& token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("graph spec '" + token + "' lacks a ':'");
    const std::string kind = token.substr(0, colon);
    const std::string value = token.substr(colon + 1);
    using dompoly::Graph;
    if (kind == "path") return Graph::path(parse_order(value, kind));
    if (kind == "cycle") return Graph::cycle(parse_order(value, kind));
    if (kind == "tildepath") return Graph::tilde_path(parse_order(value, kind));
    if (kind == "F") return Graph::pendant_cycle(parse_order(value, kind));
    if (kind == "H") return Graph::h_graph(parse_order(value, kind));
    if (kind == "g6") return dompoly::from_graph6(value);
    if (kind == "file") {
        std::ifstream in(value);
        if (!in) throw std::invalid_argument("cannot open edge list file: " + value);
        std::stringstream buf;
        buf << in.rdbuf();
        return Graph::from_edge_list_text(buf.str());
    }
    throw std::invalid_argument("unknown graph spec kind '" + kind + "'");
}

dompoly::Graph parse_spec(const std::string& spec) {
    std::vector<dompoly::Graph> parts;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const auto plus = spec.find('+', start);
        const std::string token =
            spec.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        if (token.empty()) throw std::invalid_argument("empty component in graph spec");
        parts.push_back(parse_one_spec(token));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return dompoly::Graph::disjoint_union(parts);
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("range must look like A..B");
    return {parse_order(s.substr(0, dots), "range"),
            parse_order(s.substr(dots + 2), "range")};
}

struct Options {
    std::string format = "text";
    int cap = 26;
    std::string workers = "1";
    std::string corpus;
    std::string range;

    dompoly::PolyConfig poly_config() const {
        dompoly::PolyConfig cfg;
        cfg.brute_force_cap = cap;
        cfg.workers = workers == "auto"
                          ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency()))
                          : parse_order(workers, "workers");
        if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
        return cfg;
    }
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->envname("DOMPOLY_FORMAT");
    cmd->add_option("--cap", opt.cap, "brute-force order cap")
        ->check(CLI::PositiveNumber)
        ->envname("DOMPOLY_CAP");
    cmd->add_option("--workers", opt.workers, "worker count, or 'auto'")
        ->envname("DOMPOLY_WORKERS");
}

void print_class_report(const dompoly::EquivalenceClassReport& rep, const std::string& format) {
    if (format == "json") {
        std::cout << rep.to_json() << "\n";
        return;
    }
    std::cout << "order " << rep.n << ", scanned " << rep.corpus_size << " graphs"
              << (rep.exhaustive ? " (exhaustive)" : "") << "\n";
    for (const auto& m : rep.members) std::cout << "  " << m.desc << "  [" << m.g6 << "]\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact domination polynomial toolkit"};
    app.require_subcommand(1);

    Options opt;
    std::string spec, suite = "all";
    long x_value = 0;
    int order = 0, class_n = 0;
    bool candidates = false;

    auto* poly = app.add_subcommand("poly", "print D(G,x)");
    poly->add_option("spec", spec, "graph spec, e.g. path:7 or F:4+path:2")->required();
    add_common(poly, opt);

    auto* eval = app.add_subcommand("eval", "evaluate a derivative of D at a point");
    eval->add_option("spec", spec)->required();
    eval->add_option("x", x_value, "evaluation point")->required();
    eval->add_option("order", order, "derivative order 0..3")
        ->check(CLI::Range(0, 3));
    add_common(eval, opt);

    auto* cls = app.add_subcommand("class", "equivalence class of P_n");
    cls->add_option("n", class_n)->required()->check(CLI::PositiveNumber);
    cls->add_flag("--candidates", candidates,
                  "filter the path/tilde-plus-cycles family instead (n >= 9)");
    cls->add_option("--corpus", opt.corpus, "newline-delimited graph6 file")
        ->envname("DOMPOLY_CORPUS");
    add_common(cls, opt);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite)
        ->check(CLI::IsMember({"coeffs", "minus1", "minus2", "ord3", "table1", "theorem", "all"}));
    verify->add_option("--range", opt.range, "override the suite's main range, A..B")
        ->envname("DOMPOLY_RANGE");
    add_common(verify, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (poly->parsed()) {
            const auto p = dompoly::dom_poly(parse_spec(spec), opt.poly_config());
            std::cout << (opt.format == "json" ? p.to_json() : p.to_text()) << "\n";
        } else if (eval->parsed()) {
            const auto p = dompoly::dom_poly(parse_spec(spec), opt.poly_config());
            const mpz_class v = p.derivative(order).evaluate(mpz_class(x_value));
            if (opt.format == "json")
                std::cout << "{\"value\": \"" << v.get_str() << "\"}\n";
            else
                std::cout << v.get_str() << "\n";
        } else if (cls->parsed()) {
            if (candidates) {
                if (class_n < 9)
                    throw std::invalid_argument("--candidates requires n >= 9");
                const auto rep = dompoly::verify_path_class(class_n);
                if (opt.format == "json") {
                    std::cout << rep.to_json() << "\n";
                } else {
                    std::cout << "n = " << rep.n << ": " << rep.candidates
                              << " candidates, survivors:\n";
                    for (const auto& s : rep.survivors) std::cout << "  " << s.desc << "\n";
                }
                if (!rep.survivors_expected || !rep.survivors_c4_free)
                    return kExitVerifyFail;
            } else {
                std::optional<std::vector<dompoly::Graph>> corpus;
                if (!opt.corpus.empty()) corpus = dompoly::read_graph6_file(opt.corpus);
                const auto rep = dompoly::equivalence_class_exhaustive(
                    class_n, dompoly::Graph::path(class_n), corpus);
                print_class_report(rep, opt.format);
            }
        } else if (verify->parsed()) {
            dompoly::SuiteOptions sopts;
            if (!opt.range.empty()) sopts.range = parse_range(opt.range);
            bool ok = true;
            for (const auto& res : dompoly::run_suites(suite, sopts)) {
                std::cout << res.name << ": " << (res.passed ? "PASS" : "FAIL") << " ("
                          << res.checks << " checks) " << res.detail << "\n";
                ok = ok && res.passed;
            }
            if (!ok) return kExitVerifyFail;
        }
    } catch (const dompoly::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return 0;
}
