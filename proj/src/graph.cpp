#include "dompoly/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dompoly {

void Graph::finish() {
    words_ = n_ == 0 ? 0 : (n_ + 63) / 64;
    edge_count_ = 0;
    closed_bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int v = 0; v < n_; ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        edge_count_ += nb.size();
        std::uint64_t* row = closed_bits_.data() + static_cast<std::size_t>(v) * words_;
        row[v / 64] |= 1ull << (v % 64);
        for (int u : nb) row[u / 64] |= 1ull << (u % 64);
    }
    edge_count_ /= 2;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative order");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.finish();
    return g;
}

Graph Graph::path(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edge_list(n, e);
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return from_edge_list(n, e);
}

Graph Graph::tilde_path(int n) {
    // For n = 4 the stems are adjacent already; for n <= 3 there are not
    // two stems. Only n >= 5 yields a simple graph distinct from P_n.
    if (n < 5) throw std::invalid_argument("tilde_path requires n >= 5");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, n - 2);
    return from_edge_list(n, e);
}

Graph Graph::pendant_cycle(int i) {
    if (i < 3) throw std::invalid_argument("pendant_cycle requires i >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < i; ++v) e.emplace_back(v, (v + 1) % i);
    e.emplace_back(0, i);
    return from_edge_list(i + 1, e);
}

Graph Graph::h_graph(int i) {
    if (i < 3) throw std::invalid_argument("h_graph requires i >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < i; ++v) e.emplace_back(v, (v + 1) % i);
    e.emplace_back(0, i);          // pendant leaf, vertex 0 is the stem
    e.emplace_back(i + 1, i + 2);  // the K_2
    e.emplace_back(0, i + 1);
    return from_edge_list(i + 3, e);
}

Graph Graph::disjoint_union(const std::vector<Graph>& parts) {
    std::vector<std::pair<int, int>> e;
    int n = 0;
    for (const auto& g : parts) {
        for (auto [u, v] : g.edges()) e.emplace_back(n + u, n + v);
        n += g.order();
    }
    return from_edge_list(n, e);
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return from_edge_list(n, e);
}

bool Graph::has_edge(int u, int v) const {
    check(u);
    check(v);
    if (u == v) return false;
    return (closed_row(u)[v / 64] >> (v % 64)) & 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n_; ++v)
        for (int u : adj_[v])
            if (v < u) e.emplace_back(v, u);
    return e;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : adj_[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[check(vertices[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> e;
    for (int v : vertices)
        for (int u : adj_[v])
            if (index[u] >= 0 && v < u) e.emplace_back(index[v], index[u]);
    return from_edge_list(static_cast<int>(vertices.size()), e);
}

Graph Graph::permuted(const std::vector<int>& sigma) const {
    if (static_cast<int>(sigma.size()) != n_) throw std::invalid_argument("bad permutation size");
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : edges()) e.emplace_back(sigma[u], sigma[v]);
    return from_edge_list(n_, e);
}

std::string Graph::to_edge_list_text() const {
    std::ostringstream out;
    out << n_ << ' ' << edge_count_ << '\n';
    for (auto [u, v] : edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph Graph::from_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    int n;
    std::size_t m;
    if (!(in >> n >> m)) throw std::invalid_argument("bad edge-list header");
    std::vector<std::pair<int, int>> e(m);
    for (auto& [u, v] : e)
        if (!(in >> u >> v)) throw std::invalid_argument("truncated edge list");
    return from_edge_list(n, e);
}

}  // namespace dompoly
