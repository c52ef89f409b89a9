#pragma once

#include <map>
#include <set>
#include <vector>

#include "dompoly/graph.hpp"

namespace dompoly {

/// An induced r-cycle in which every vertex but `anchor` has degree two
/// in the whole graph.
struct RLoop {
    std::vector<int> vertices;  // sorted, includes the anchor
    int anchor;
};

/// Everything the coefficient formulas consume, extracted in one pass.
struct StructureProfile {
    std::set<int> stems;   // W
    std::set<int> leaves;  // degree-1 vertices (K_2 vertices are both)
    std::map<int, std::set<int>> degree_classes;  // r -> T_r (non-stem vertices of degree r)
    std::map<int, std::set<int>> stem_leaves;     // s_i -> S_i (non-stem leaves on s_i)
    std::set<int> v0;                             // T_2 vertices with no adjacent stem
    std::map<int, std::set<int>> v1;              // stem -> V_1^i
    std::map<std::pair<int, int>, std::set<int>> v2;  // {i,j} (i<j) -> V_2^ij
    std::map<int, std::vector<RLoop>> loops;          // r -> r-loops
    std::map<int, int> cycle_components;              // r -> |C_r|
    int k2_components = 0;
    int isolated = 0;

    int omega() const { return static_cast<int>(stems.size()); }
    int t(int r) const {
        auto it = degree_classes.find(r);
        return it == degree_classes.end() ? 0 : static_cast<int>(it->second.size());
    }
    int loop_count(int r) const {
        auto it = loops.find(r);
        return it == loops.end() ? 0 : static_cast<int>(it->second.size());
    }
    int loop_count_at(int r, int stem) const;  // |L_r^i|
    int cycles(int r) const {
        auto it = cycle_components.find(r);
        return it == cycle_components.end() ? 0 : it->second;
    }
};

StructureProfile structure_profile(const Graph& g);

/// Every vertex is a stem or has degree at most k.
bool is_in_Gk(const Graph& g, int k);

}  // namespace dompoly
