#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dompoly/graph.hpp"
#include "dompoly/poly.hpp"

namespace dompoly {

/// Labeling-independent encoding: the graph6 string of the relabeling
/// whose column-major upper-triangle bit string is lexicographically
/// minimal. Equal strings exactly for isomorphic graphs. Budget n <= 12.
std::string canonical_form(const Graph& g);

/// One representative per isomorphism class, built by vertex
/// augmentation from order n-1 with canonical-form deduplication.
/// Built-in cap n <= 8 (12346 classes).
std::vector<Graph> enumerate_graphs(int n);

bool d_equivalent(const Graph& g, const Graph& h, const PolyConfig& cfg = {});

/// Human-readable component decomposition, e.g. "P5 + C3" or "F4 + K2".
std::string describe(const Graph& g);

struct ClassMember {
    std::string g6;
    std::string desc;
};

struct EquivalenceClassReport {
    int n = 0;
    std::string target_g6;
    bool exhaustive = false;
    std::vector<ClassMember> members;
    long corpus_size = 0;

    std::string to_json() const;
};

/// Scan every order-n graph (built-in enumeration for n <= 8, or the
/// supplied corpus) for dom_poly equal to the target's. Members are
/// independently re-verified by brute force.
EquivalenceClassReport equivalence_class_exhaustive(
    int n, const Graph& target, const std::optional<std::vector<Graph>>& corpus = {});

/// All H u C with H a path or tilde path and C a union of up to two
/// cycles, total order n. The search space Lemmas 3.4/3.8 reduce to.
std::vector<Graph> candidate_family(int n);

struct EliminatedCandidate {
    std::string desc;
    int first_diff = 0;  // least i with d(cand, i) != d(P_n, i)
};

struct PathClassReport {
    int n = 0;
    long candidates = 0;
    std::vector<ClassMember> survivors;
    std::vector<EliminatedCandidate> eliminated;
    bool survivors_expected = false;  // survivors are exactly {P_n, ~P_n}
    bool survivors_c4_free = false;
    bool conditional = true;  // scope: the reduced candidate family only

    std::string to_json() const;
};

/// Filter candidate_family(n) against D(P_n,x); n >= 9.
PathClassReport verify_path_class(int n);

/// The n = 1..8 path classes via exhaustive search.
std::vector<EquivalenceClassReport> table1_report();

/// Newline-delimited graph6 file.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace dompoly
