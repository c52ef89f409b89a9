#include "dompoly/equivalence.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace dompoly {

namespace {

// Backtracking search for the vertex order whose column-major
// upper-triangle bit string is minimal. At each level only candidates
// with the minimal next column can extend a minimal string, so the
// branching is over ties; tied twins (equal rows off the pair) are
// interchangeable by an automorphism and only one is tried.
struct Canonizer {
    int n;
    std::vector<std::vector<char>> adj;
    std::vector<std::vector<char>> twin;

    std::vector<int> order, cols, used;
    std::vector<int> best_order, best_cols;
    bool have_best = false;

    explicit Canonizer(const Graph& g) : n(g.order()) {
        adj.assign(n, std::vector<char>(n, 0));
        for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
        twin.assign(n, std::vector<char>(n, 0));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                bool t = true;
                for (int w = 0; w < n && t; ++w)
                    if (w != u && w != v) t = adj[u][w] == adj[v][w];
                twin[u][v] = twin[v][u] = t;
            }
        order.assign(n, -1);
        cols.assign(n, 0);
        used.assign(n, 0);
    }

    // cmp: -1 when the current prefix is already strictly below the
    // best, 0 when equal so far.
    void dfs(int level, int cmp) {
        if (level == n) {
            // cmp may be stale once a sibling subtree improves the best,
            // so compare outright
            if (!have_best || cols < best_cols) {
                best_order = order;
                best_cols = cols;
                have_best = true;
            }
            return;
        }
        int mincol = -1;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            int col = 0;
            for (int i = 0; i < level; ++i) col = col * 2 + adj[order[i]][v];
            if (mincol < 0 || col < mincol) mincol = col;
        }
        int next_cmp = cmp;
        if (cmp == 0 && have_best) {
            if (mincol > best_cols[level]) return;
            if (mincol < best_cols[level]) next_cmp = -1;
        }
        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            int col = 0;
            for (int i = 0; i < level; ++i) col = col * 2 + adj[order[i]][v];
            if (col != mincol) continue;
            if (std::any_of(tried.begin(), tried.end(),
                            [&](int u) { return twin[u][v]; }))
                continue;
            tried.push_back(v);
            used[v] = 1;
            order[level] = v;
            cols[level] = mincol;
            dfs(level + 1, next_cmp);
            used[v] = 0;
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > 12) throw cap_exceeded("canonical_form: order exceeds budget of 12");
    if (n <= 1) return to_graph6(g);
    Canonizer c(g);
    c.dfs(0, 0);
    std::vector<int> sigma(n);
    for (int pos = 0; pos < n; ++pos) sigma[c.best_order[pos]] = pos;
    return to_graph6(g.permuted(sigma));
}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_graphs: n must be positive");
    if (n > 8) throw cap_exceeded("enumerate_graphs: built-in cap is order 8");
    std::vector<Graph> cur{Graph::from_edge_list(1, {})};
    for (int m = 2; m <= n; ++m) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& h : cur) {
            auto base = h.edges();
            for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
                auto edges = base;
                for (int v = 0; v < m - 1; ++v)
                    if ((mask >> v) & 1) edges.emplace_back(v, m - 1);
                std::string cf = canonical_form(Graph::from_edge_list(m, edges));
                if (seen.insert(cf).second) next.push_back(from_graph6(cf));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

bool d_equivalent(const Graph& g, const Graph& h, const PolyConfig& cfg) {
    return dom_poly(g, cfg) == dom_poly(h, cfg);
}

namespace {

struct ComponentName {
    int order;
    std::string desc;
};

ComponentName name_component(const Graph& c) {
    const int n = c.order();
    const auto num = std::to_string(n);
    if (n == 1) return {1, "K1"};
    if (n == 2 && c.edge_count() == 1) return {2, "K2"};

    int deg1 = 0, deg2 = 0, deg3 = 0, deg4 = 0;
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v) {
        switch (c.degree(v)) {
            case 1: ++deg1; leaves.push_back(v); break;
            case 2: ++deg2; break;
            case 3: ++deg3; break;
            case 4: ++deg4; break;
            default: break;
        }
    }
    const auto m = c.edge_count();
    if (deg2 == n) return {n, "C" + num};
    if (m == static_cast<std::size_t>(n) - 1 && deg1 == 2 && deg2 == n - 2)
        return {n, "P" + num};
    if (n >= 5 && deg1 == 2 && deg3 == 2 && deg2 == n - 4 && m == static_cast<std::size_t>(n)) {
        int s0 = c.neighbors(leaves[0])[0], s1 = c.neighbors(leaves[1])[0];
        if (s0 != s1 && c.degree(s0) == 3 && c.degree(s1) == 3 && c.has_edge(s0, s1))
            return {n, "~P" + num};
    }
    if (n >= 4 && m == static_cast<std::size_t>(n) && deg1 == 1 && deg3 == 1 &&
        deg2 == n - 2 && c.degree(c.neighbors(leaves[0])[0]) == 3)
        return {n, "F" + std::to_string(n - 1)};
    if (n >= 6 && m == static_cast<std::size_t>(n) && deg1 == 2 && deg4 == 1 &&
        deg2 == n - 3) {
        int hub = -1;
        for (int v = 0; v < n; ++v)
            if (c.degree(v) == 4) hub = v;
        for (int i = 0; i < 2; ++i) {
            int a = c.neighbors(leaves[i])[0], b = c.neighbors(leaves[1 - i])[0];
            if (a == hub && c.degree(b) == 2 && c.has_edge(b, hub))
                return {n, "H" + std::to_string(n - 3)};
        }
    }
    return {n, "g6:" + to_graph6(c)};
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '\\' || ch == '"') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

void append_members(std::ostringstream& out, const std::vector<ClassMember>& members) {
    out << "[";
    for (std::size_t i = 0; i < members.size(); ++i)
        out << (i ? ", " : "") << "{\"g6\": \"" << json_escape(members[i].g6)
            << "\", \"desc\": \"" << json_escape(members[i].desc) << "\"}";
    out << "]";
}

bool has_c4_component(const Graph& g) {
    for (const auto& comp : g.components())
        if (comp.size() == 4 && std::all_of(comp.begin(), comp.end(), [&](int v) {
                return g.degree(v) == 2;
            }))
            return true;
    return false;
}

}  // namespace

std::string describe(const Graph& g) {
    std::vector<ComponentName> parts;
    for (const auto& comp : g.components()) parts.push_back(name_component(g.induced(comp)));
    if (parts.empty()) return "empty";
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        return a.order != b.order ? a.order > b.order : a.desc < b.desc;
    });
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " + ";
        out += parts[i].desc;
    }
    return out;
}

std::string EquivalenceClassReport::to_json() const {
    std::ostringstream out;
    out << "{\"n\": " << n << ", \"target\": \"" << json_escape(target_g6)
        << "\", \"exhaustive\": " << (exhaustive ? "true" : "false")
        << ", \"members\": ";
    append_members(out, members);
    out << ", \"corpus_size\": " << corpus_size << "}";
    return out.str();
}

EquivalenceClassReport equivalence_class_exhaustive(
    int n, const Graph& target, const std::optional<std::vector<Graph>>& corpus) {
    if (n < 1) throw std::invalid_argument("equivalence class: n must be positive");
    EquivalenceClassReport rep;
    rep.n = n;
    rep.target_g6 = to_graph6(target);

    std::vector<Graph> graphs;
    if (corpus) {
        graphs = *corpus;
        rep.exhaustive = false;
    } else if (n <= 8) {
        graphs = enumerate_graphs(n);
        rep.exhaustive = true;
    } else {
        throw std::invalid_argument(
            "equivalence class: no built-in enumeration beyond order 8; supply a corpus");
    }

    const DomPolynomial want = dom_poly(target);
    std::set<std::string> seen;
    for (const Graph& g : graphs) {
        if (g.order() != n) continue;
        ++rep.corpus_size;
        if (!(dom_poly(g) == want)) continue;
        // don't trust the filter path: recount by brute force
        if (!(dom_poly_bruteforce(g) == want))
            throw std::logic_error("equivalence class: filter/brute-force disagreement");
        std::string key = g.order() <= 12 ? canonical_form(g) : to_graph6(g);
        if (seen.insert(key).second) rep.members.push_back({key, describe(g)});
    }
    return rep;
}

std::vector<Graph> candidate_family(int n) {
    if (n < 9) throw std::invalid_argument("candidate_family: n must be at least 9");
    std::vector<Graph> out;
    for (int n1 = 1; n1 <= n; ++n1) {
        std::vector<std::vector<int>> cycle_sets;
        const int rest = n - n1;
        if (rest == 0) cycle_sets.push_back({});
        if (rest >= 3) cycle_sets.push_back({rest});
        for (int c1 = 3; rest - c1 >= c1; ++c1) cycle_sets.push_back({c1, rest - c1});

        std::vector<Graph> heads{Graph::path(n1)};
        if (n1 >= 5) heads.push_back(Graph::tilde_path(n1));
        for (const Graph& head : heads)
            for (const auto& cs : cycle_sets) {
                std::vector<Graph> parts{head};
                for (int c : cs) parts.push_back(Graph::cycle(c));
                out.push_back(Graph::disjoint_union(parts));
            }
    }
    return out;
}

std::string PathClassReport::to_json() const {
    std::ostringstream out;
    out << "{\"n\": " << n << ", \"conditional\": " << (conditional ? "true" : "false")
        << ", \"candidates\": " << candidates << ", \"survivors\": ";
    append_members(out, survivors);
    out << ", \"eliminated\": [";
    for (std::size_t i = 0; i < eliminated.size(); ++i)
        out << (i ? ", " : "") << "{\"desc\": \"" << json_escape(eliminated[i].desc)
            << "\", \"first_diff\": " << eliminated[i].first_diff << "}";
    out << "], \"survivors_expected\": " << (survivors_expected ? "true" : "false")
        << ", \"survivors_c4_free\": " << (survivors_c4_free ? "true" : "false") << "}";
    return out.str();
}

PathClassReport verify_path_class(int n) {
    PathClassReport rep;
    rep.n = n;
    const DomPolynomial want = path_poly(n);
    bool saw_path = false, saw_tilde = false;
    for (const Graph& cand : candidate_family(n)) {
        ++rep.candidates;
        const DomPolynomial p = dom_poly(cand);
        if (p == want) {
            std::string desc = describe(cand);
            rep.survivors.push_back({to_graph6(cand), desc});
            saw_path |= desc == "P" + std::to_string(n);
            saw_tilde |= desc == "~P" + std::to_string(n);
            continue;
        }
        int diff = 0;
        while (diff <= n && p.coeffs[diff] == want.coeffs[diff]) ++diff;
        rep.eliminated.push_back({describe(cand), diff});
    }
    rep.survivors_expected = rep.survivors.size() == 2 && saw_path && saw_tilde;
    rep.survivors_c4_free = true;
    for (const auto& s : rep.survivors)
        if (has_c4_component(from_graph6(s.g6))) rep.survivors_c4_free = false;
    return rep;
}

std::vector<EquivalenceClassReport> table1_report() {
    std::vector<EquivalenceClassReport> out;
    for (int n = 1; n <= 8; ++n)
        out.push_back(equivalence_class_exhaustive(n, Graph::path(n)));
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

}  // namespace dompoly
