#include "dompoly/structure.hpp"

#include <algorithm>

namespace dompoly {

int StructureProfile::loop_count_at(int r, int stem) const {
    auto it = loops.find(r);
    if (it == loops.end()) return 0;
    int c = 0;
    for (const auto& loop : it->second)
        if (loop.anchor == stem) ++c;
    return c;
}

StructureProfile structure_profile(const Graph& g) {
    StructureProfile p;
    const int n = g.order();

    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) p.leaves.insert(v);
    for (int v : p.leaves) p.stems.insert(g.neighbors(v)[0]);

    for (int v = 0; v < n; ++v) {
        if (p.stems.count(v)) continue;
        p.degree_classes[g.degree(v)].insert(v);
    }

    for (int s : p.stems) {
        auto& si = p.stem_leaves[s];  // present even when empty (K_2 stems)
        for (int u : g.neighbors(s))
            if (p.leaves.count(u) && !p.stems.count(u)) si.insert(u);
    }

    // Partition T_2 by the number of adjacent stems.
    if (auto it = p.degree_classes.find(2); it != p.degree_classes.end()) {
        for (int v : it->second) {
            std::vector<int> adj_stems;
            for (int u : g.neighbors(v))
                if (p.stems.count(u)) adj_stems.push_back(u);
            if (adj_stems.empty())
                p.v0.insert(v);
            else if (adj_stems.size() == 1)
                p.v1[adj_stems[0]].insert(v);
            else
                p.v2[{std::min(adj_stems[0], adj_stems[1]),
                      std::max(adj_stems[0], adj_stems[1])}]
                    .insert(v);
        }
    }

    // r-loops: from each vertex of degree != 2, walk degree-2 chains and
    // see whether they close back on the start. Interior chain vertices
    // have both their edges on the chain, so a closed walk is induced.
    std::set<std::vector<int>> seen_loops;
    for (int a = 0; a < n; ++a) {
        if (g.degree(a) == 2) continue;
        for (int b : g.neighbors(a)) {
            if (g.degree(b) != 2) continue;
            int prev = a, cur = b;
            std::vector<int> chain{b};
            while (g.degree(cur) == 2) {
                int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                                       : g.neighbors(cur)[0];
                prev = cur;
                cur = next;
                if (cur == a) break;
                chain.push_back(cur);
            }
            if (cur != a || chain.size() < 2) continue;
            std::vector<int> verts = chain;
            verts.push_back(a);
            std::sort(verts.begin(), verts.end());
            if (seen_loops.insert(verts).second)
                p.loops[static_cast<int>(verts.size())].push_back({verts, a});
        }
    }

    for (const auto& comp : g.components()) {
        if (comp.size() == 1) {
            ++p.isolated;
        } else if (comp.size() == 2) {
            ++p.k2_components;
        } else if (std::all_of(comp.begin(), comp.end(),
                               [&](int v) { return g.degree(v) == 2; })) {
            ++p.cycle_components[static_cast<int>(comp.size())];
        }
    }
    return p;
}

bool is_in_Gk(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    StructureProfile p = structure_profile(g);
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > k && !p.stems.count(v)) return false;
    return true;
}

}  // namespace dompoly
