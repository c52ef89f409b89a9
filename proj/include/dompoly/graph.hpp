#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dompoly {

/// Raised when an operation would exceed a configured resource cap
/// (brute-force order, canonizer budget, ...).
class cap_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after
/// construction; neighborhoods are kept both as sorted vertex lists and
/// as bit rows so closed-neighborhood unions cost O(n/64) per vertex.
class Graph {
public:
    Graph() = default;  // the order-0 graph

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph tilde_path(int n);     // P_n plus the stem-stem edge, n >= 5
    static Graph pendant_cycle(int i);  // F_i: C_i with a pendant edge, order i+1
    static Graph h_graph(int i);        // H_i: F_i joined to a K_2 via its stem, order i+3
    static Graph disjoint_union(const std::vector<Graph>& parts);
    static Graph complete(int n);

    int order() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }
    bool has_edge(int u, int v) const;

    /// Closed neighborhood N[v] as bit words (n bits, 64 per word).
    const std::uint64_t* closed_row(int v) const {
        return closed_bits_.data() + static_cast<std::size_t>(check(v)) * words_;
    }
    int words_per_row() const { return words_; }

    std::vector<std::pair<int, int>> edges() const;
    std::vector<std::vector<int>> components() const;
    Graph induced(const std::vector<int>& vertices) const;
    Graph permuted(const std::vector<int>& sigma) const;  // sigma[v] = new label

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

    /// Plain-text edge list: first line "n m", then m lines "u v".
    std::string to_edge_list_text() const;
    static Graph from_edge_list_text(const std::string& text);

private:
    int check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
        return v;
    }
    void finish();  // sort adjacency, build bit rows

    int n_ = 0;
    int words_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> closed_bits_;
};

/// graph6 encoding, bit-exact per the published format. Orders above 62
/// use the 4-byte long form (up to 258047 vertices).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& bytes);

}  // namespace dompoly
