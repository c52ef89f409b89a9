#include "dompoly/verify.hpp"

#include <random>
#include <set>
#include <sstream>

#include "dompoly/coeffs.hpp"
#include "dompoly/equivalence.hpp"
#include "dompoly/poly.hpp"
#include "dompoly/structure.hpp"

namespace dompoly {

namespace {

bool hypotheses_ok(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return false;
    for (const auto& comp : g.components())
        if (comp.size() == 2) return false;
    return true;
}

Graph random_tree(int n, std::mt19937& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    return Graph::from_edge_list(n, edges);
}

Graph spider(int leaves1, int legs2) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int i = 0; i < leaves1; ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < legs2; ++i) {
        edges.emplace_back(0, next);
        edges.emplace_back(next, next + 1);
        next += 2;
    }
    return Graph::from_edge_list(next, edges);
}

}  // namespace

std::vector<Graph> random_hypothesis_graphs(int count, int max_order, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Graph> out;
    std::uniform_int_distribution<int> order_dist(3, max_order);
    std::uniform_real_distribution<double> p_dist(0.15, 0.6);
    while (static_cast<int>(out.size()) < count) {
        const int n = order_dist(rng);
        const double p = p_dist(rng);
        std::vector<std::pair<int, int>> edges;
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) edges.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, edges);
        if (hypotheses_ok(g)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> random_g2_graphs(int count, int max_order, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Graph> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<Graph> parts;
        int budget = max_order;
        while (budget >= 3) {
            Graph part;
            switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
                case 0:
                    part = Graph::path(std::uniform_int_distribution<int>(3, 8)(rng));
                    break;
                case 1:
                    part = Graph::cycle(std::uniform_int_distribution<int>(3, 8)(rng));
                    break;
                case 2:
                    part = spider(std::uniform_int_distribution<int>(1, 3)(rng),
                                  std::uniform_int_distribution<int>(0, 2)(rng));
                    break;
                case 3:
                    part = Graph::pendant_cycle(std::uniform_int_distribution<int>(3, 6)(rng));
                    break;
                default:
                    part = Graph::tilde_path(std::uniform_int_distribution<int>(5, 8)(rng));
            }
            if (part.order() > budget) break;
            budget -= part.order();
            parts.push_back(std::move(part));
            if (std::uniform_int_distribution<int>(0, 1)(rng)) break;
        }
        if (parts.empty()) continue;
        Graph g = Graph::disjoint_union(parts);
        if (hypotheses_ok(g) && is_in_Gk(g, 2)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> random_forests(int count, int max_order, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Graph> out;
    while (static_cast<int>(out.size()) < count) {
        const int trees = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<Graph> parts;
        int budget = max_order;
        for (int t = 0; t < trees && budget > 0; ++t) {
            const int n = std::uniform_int_distribution<int>(1, budget)(rng);
            parts.push_back(random_tree(n, rng));
            budget -= n;
        }
        out.push_back(Graph::disjoint_union(parts));
    }
    return out;
}

namespace {

SuiteResult fail(const std::string& name, long checks, const std::string& detail) {
    return {name, false, checks, detail};
}

SuiteResult pass(const std::string& name, long checks, const std::string& detail) {
    return {name, true, checks, detail};
}

SuiteResult suite_coeffs(const SuiteOptions&) {
    long checks = 0;
    auto run_one = [&](const Graph& g, bool try_g2) -> std::string {
        const DomPolynomial brute = dom_poly_bruteforce(g);
        const int n = g.order();
        const int gamma = brute.gamma();
        auto mismatch = [&](const std::string& what, const mpz_class& got, int idx) {
            std::ostringstream os;
            os << what << " on " << describe(g) << " (" << to_graph6(g) << "): got "
               << got.get_str() << ", brute force d(G," << idx
               << ") = " << brute.coeffs[idx].get_str();
            return os.str();
        };
        ++checks;
        if (d_top(g, 1) != brute.coeffs[n - 1])
            return mismatch("d_top(1)", d_top(g, 1), n - 1);
        ++checks;
        if (d_top(g, 2) != brute.coeffs[n - 2])
            return mismatch("d_top(2)", d_top(g, 2), n - 2);
        for (int k = 2; k <= 4 && k <= n - gamma; ++k) {
            ++checks;
            if (d_n_minus_k(g, k) != brute.coeffs[n - k])
                return mismatch("d_n_minus_k(" + std::to_string(k) + ")",
                                d_n_minus_k(g, k), n - k);
        }
        if (n - 3 >= gamma) {
            ++checks;
            if (d_n_minus_3(g) != brute.coeffs[n - 3])
                return mismatch("d_n_minus_3", d_n_minus_3(g), n - 3);
        }
        if (try_g2 && n - 4 >= gamma) {
            ++checks;
            if (d_n_minus_4(g) != brute.coeffs[n - 4])
                return mismatch("d_n_minus_4", d_n_minus_4(g), n - 4);
        }
        return "";
    };
    for (const Graph& g : random_hypothesis_graphs(200, 11, 0xd0217u))
        if (auto err = run_one(g, is_in_Gk(g, 2)); !err.empty())
            return fail("coeffs", checks, err);
    for (const Graph& g : random_g2_graphs(120, 11, 0xd0218u))
        if (auto err = run_one(g, true); !err.empty()) return fail("coeffs", checks, err);
    return pass("coeffs", checks,
                "closed forms match brute force on 200 random + 120 structured graphs");
}

SuiteResult suite_minus1(const SuiteOptions& opts) {
    auto [lo, hi] = opts.range.value_or(std::make_pair(1, 50));
    long checks = 0;
    for (int order = 0; order <= 3; ++order) {
        for (int n = std::max(lo, 1); n <= hi; ++n) {
            ++checks;
            mpz_class exact = path_poly(n).derivative(order).evaluate(-1);
            if (closed_eval_minus1(Family::path, n, order) != mpq_class(exact))
                return fail("minus1", checks,
                            "path n=" + std::to_string(n) + " order " +
                                std::to_string(order) + ": table disagrees with " +
                                exact.get_str());
        }
        for (int n = std::max(lo, 3); n <= hi; ++n) {
            ++checks;
            mpz_class exact = cycle_poly(n).derivative(order).evaluate(-1);
            if (closed_eval_minus1(Family::cycle, n, order) != mpq_class(exact))
                return fail("minus1", checks,
                            "cycle n=" + std::to_string(n) + " order " +
                                std::to_string(order) + ": table disagrees with " +
                                exact.get_str());
        }
    }
    for (const Graph& f : random_forests(200, 12, 0xf03e57u)) {
        ++checks;
        mpz_class v = dom_poly(f).evaluate(-1);
        if (v != 1 && v != -1)
            return fail("minus1", checks,
                        "forest " + to_graph6(f) + ": D(F,-1) = " + v.get_str());
    }
    return pass("minus1", checks, "derivative tables and forest values hold");
}

SuiteResult suite_minus2(const SuiteOptions& opts) {
    auto [lo, hi] = opts.range.value_or(std::make_pair(3, 200));
    long checks = 0;
    AlternationReport rep = minus_two_alternation_check(Family::path, lo, hi);
    ++checks;
    if (lo <= 3 && hi >= 9 && rep.zeros != std::vector<int>{4, 7, 8})
        return fail("minus2", checks, "unexpected zero set of D(P_n,-2)");
    auto val = [&](int m) { return rep.values[m - lo]; };
    if (lo <= 13 && hi >= 15) {
        ++checks;
        if (val(13) != -32 || val(14) != 64 || val(15) != -96)
            return fail("minus2", checks, "values at n = 13..15 differ from (-32, 64, -96)");
    }
    if (rep.window_start && hi > 13) {
        ++checks;
        if (*rep.window_start > 13)
            return fail("minus2", checks,
                        "alternation window starts at " + std::to_string(*rep.window_start));
        for (int m = 13; m < hi; ++m) {
            ++checks;
            if (sgn(val(m)) != -sgn(val(m + 1)) || abs(val(m)) >= abs(val(m + 1)))
                return fail("minus2", checks,
                            "alternation breaks between n = " + std::to_string(m) +
                                " and " + std::to_string(m + 1));
        }
    }
    return pass("minus2", checks,
                "zeros {4,7,8}; alternating, growing magnitudes from n = 13");
}

SuiteResult suite_ord3(const SuiteOptions& opts) {
    auto [lo, hi] = opts.range.value_or(std::make_pair(1, 60));
    long checks = 0;
    for (int n = std::max(lo, 1); n <= hi; ++n) {
        ++checks;
        unsigned long a = ord_p(path_poly(n).evaluate(-3), 3);
        if (!ord3_allowed(Family::path, n).count(a))
            return fail("ord3", checks,
                        "path n=" + std::to_string(n) + ": ord_3 = " + std::to_string(a));
    }
    for (int n = std::max(lo, 3); n <= hi; ++n) {
        ++checks;
        unsigned long a = ord_p(cycle_poly(n).evaluate(-3), 3);
        if (!ord3_allowed(Family::cycle, n).count(a))
            return fail("ord3", checks,
                        "cycle n=" + std::to_string(n) + ": ord_3 = " + std::to_string(a));
    }
    return pass("ord3", checks, "valuations sit in the admissible sets");
}

SuiteResult suite_table1(const SuiteOptions&) {
    const int expect_size[9] = {0, 1, 1, 1, 2, 2, 2, 4, 4};
    long checks = 0;
    auto reports = table1_report();
    for (const auto& rep : reports) {
        ++checks;
        if (static_cast<int>(rep.members.size()) != expect_size[rep.n])
            return fail("table1", checks,
                        "class of P_" + std::to_string(rep.n) + " has " +
                            std::to_string(rep.members.size()) + " members, expected " +
                            std::to_string(expect_size[rep.n]));
        std::vector<Graph> expected{Graph::path(rep.n)};
        if (rep.n == 4)
            expected.push_back(Graph::disjoint_union({Graph::path(2), Graph::path(2)}));
        if (rep.n >= 5) expected.push_back(Graph::tilde_path(rep.n));
        if (rep.n >= 7) {
            expected.push_back(
                Graph::disjoint_union({Graph::pendant_cycle(rep.n - 3), Graph::path(2)}));
            expected.push_back(Graph::h_graph(rep.n - 3));
        }
        std::set<std::string> want;
        for (const Graph& g : expected) want.insert(canonical_form(g));
        std::set<std::string> got;
        for (const auto& m : rep.members) got.insert(m.g6);
        ++checks;
        if (want != got)
            return fail("table1", checks,
                        "members of [P_" + std::to_string(rep.n) + "] differ from the table");
    }
    return pass("table1", checks, "class sizes (1,1,1,2,2,2,4,4) with the listed members");
}

SuiteResult suite_theorem(const SuiteOptions& opts) {
    auto [lo, hi] = opts.range.value_or(std::make_pair(9, 30));
    long checks = 0;
    for (int n = 5; n <= 50; ++n) {
        ++checks;
        if (!(dom_poly(Graph::tilde_path(n)) == path_poly(n)))
            return fail("theorem", checks,
                        "irrelevant-edge identity fails at n = " + std::to_string(n));
    }
    for (int n = std::max(lo, 9); n <= hi; ++n) {
        ++checks;
        PathClassReport rep = verify_path_class(n);
        if (!rep.survivors_expected) {
            std::string survivors;
            for (const auto& s : rep.survivors) survivors += " " + s.desc;
            return fail("theorem", checks,
                        "n = " + std::to_string(n) + ": survivors are" + survivors);
        }
        if (!rep.survivors_c4_free)
            return fail("theorem", checks,
                        "n = " + std::to_string(n) + ": a survivor has a C_4 component");
    }
    return pass("theorem", checks,
                "candidate filtering leaves exactly {P_n, ~P_n} (within the reduced family)");
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "coeffs") return suite_coeffs(opts);
    if (name == "minus1") return suite_minus1(opts);
    if (name == "minus2") return suite_minus2(opts);
    if (name == "ord3") return suite_ord3(opts);
    if (name == "table1") return suite_table1(opts);
    if (name == "theorem") return suite_theorem(opts);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& opts) {
    if (name != "all") return {run_suite(name, opts)};
    std::vector<SuiteResult> out;
    for (const char* s : {"coeffs", "minus1", "minus2", "ord3", "table1", "theorem"})
        out.push_back(run_suite(s, opts));
    return out;
}

}  // namespace dompoly
