#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dompoly/equivalence.hpp"

using namespace dompoly;

TEST_CASE("canonical form is permutation invariant") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> order_dist(1, 8);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = order_dist(rng);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < 0.4) edges.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, edges);
        std::vector<int> sigma(n);
        for (int v = 0; v < n; ++v) sigma[v] = v;
        std::shuffle(sigma.begin(), sigma.end(), rng);
        CHECK(canonical_form(g) == canonical_form(g.permuted(sigma)));
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    Graph star = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(canonical_form(Graph::path(4)) != canonical_form(star));
    std::set<std::string> forms;
    for (const Graph& g : enumerate_graphs(4)) forms.insert(canonical_form(g));
    CHECK(forms.size() == 11);
    CHECK_THROWS_AS(canonical_form(Graph::path(13)), cap_exceeded);
}

TEST_CASE("enumeration counts match the known sequence") {
    const int counts[8] = {1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 1; n <= 7; ++n)
        CHECK(static_cast<int>(enumerate_graphs(n).size()) == counts[n - 1]);
    CHECK_THROWS_AS(enumerate_graphs(9), cap_exceeded);
}

TEST_CASE("d_equivalence spot checks") {
    Graph two_k2 = Graph::disjoint_union({Graph::path(2), Graph::path(2)});
    CHECK(d_equivalent(Graph::path(4), two_k2));
    CHECK(d_equivalent(Graph::path(6), Graph::tilde_path(6)));
    CHECK_FALSE(d_equivalent(Graph::path(5), Graph::cycle(5)));
}

TEST_CASE("component descriptions") {
    CHECK(describe(Graph::path(5)) == "P5");
    CHECK(describe(Graph::tilde_path(8)) == "~P8");
    CHECK(describe(Graph::disjoint_union({Graph::pendant_cycle(4), Graph::path(2)})) ==
          "F4 + K2");
    CHECK(describe(Graph::h_graph(5)) == "H5");
    CHECK(describe(Graph::disjoint_union({Graph::cycle(3), Graph::path(3)})) == "C3 + P3");
    CHECK(describe(Graph::path(1)) == "K1");
}

TEST_CASE("equivalence classes for small orders") {
    auto rep4 = equivalence_class_exhaustive(4, Graph::path(4));
    CHECK(rep4.exhaustive);
    CHECK(rep4.corpus_size == 11);
    REQUIRE(rep4.members.size() == 2);
    std::set<std::string> descs;
    for (const auto& m : rep4.members) descs.insert(m.desc);
    CHECK(descs == std::set<std::string>{"P4", "K2 + K2"});

    auto rep3 = equivalence_class_exhaustive(3, Graph::path(3));
    CHECK(rep3.members.size() == 1);

    CHECK_THROWS_AS(equivalence_class_exhaustive(9, Graph::path(9)), std::invalid_argument);
}

TEST_CASE("corpus-driven class search") {
    std::vector<Graph> corpus{Graph::path(9), Graph::tilde_path(9), Graph::cycle(9),
                              Graph::path(8)};
    auto rep = equivalence_class_exhaustive(9, Graph::path(9), corpus);
    CHECK_FALSE(rep.exhaustive);
    CHECK(rep.corpus_size == 3);  // the order-8 entry is skipped
    CHECK(rep.members.size() == 2);
}

TEST_CASE("candidate family composition") {
    auto fam = candidate_family(9);
    auto contains = [&](const std::string& desc) {
        return std::any_of(fam.begin(), fam.end(),
                           [&](const Graph& g) { return describe(g) == desc; });
    };
    CHECK(contains("P9"));
    CHECK(contains("~P9"));
    CHECK(contains("C3 + C3 + P3"));
    CHECK(contains("C6 + P3"));
    CHECK_FALSE(contains("C9"));  // every member keeps a path part
    CHECK_THROWS_AS(candidate_family(8), std::invalid_argument);
}

TEST_CASE("path class verification at n = 9") {
    PathClassReport rep = verify_path_class(9);
    CHECK(rep.survivors_expected);
    CHECK(rep.survivors_c4_free);
    CHECK(rep.survivors.size() == 2);
    CHECK(rep.candidates == static_cast<long>(candidate_family(9).size()));
    for (const auto& e : rep.eliminated) CHECK(e.first_diff <= 9);
}

TEST_CASE("report serialization") {
    auto rep = equivalence_class_exhaustive(4, Graph::path(4));
    std::string json = rep.to_json();
    CHECK(json.find("\"exhaustive\": true") != std::string::npos);
    CHECK(json.find("\"corpus_size\": 11") != std::string::npos);
}
