#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dompoly/coeffs.hpp"
#include "dompoly/structure.hpp"

using namespace dompoly;

namespace {

// The worked 23-vertex example: a spider of leaves and loops hanging
// off four stems. 0-based labels; vertices 3, 4, 11, 21 are the stems.
Graph figure_graph() {
    return Graph::from_edge_list(
        23, {{0, 3},   {1, 3},   {2, 3},   {3, 4},   {4, 5},   {4, 6},   {4, 7},
             {7, 8},   {8, 9},   {9, 4},   {4, 10},  {10, 11}, {11, 12}, {11, 13},
             {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18}, {18, 11}, {11, 19},
             {19, 20}, {20, 11}, {11, 21}, {21, 22}});
}

}  // namespace

TEST_CASE("structure profile of the worked example") {
    Graph g = figure_graph();
    StructureProfile p = structure_profile(g);
    CHECK(p.omega() == 4);
    CHECK(p.stems == std::set<int>{3, 4, 11, 21});
    CHECK(p.t(1) == 7);
    CHECK(p.t(2) == 12);
    CHECK(p.loop_count(3) == 1);
    CHECK(p.loop_count_at(3, 11) == 1);
    CHECK(p.loop_count(4) == 1);
    CHECK(p.loop_count_at(4, 4) == 1);
    CHECK(p.loop_count(7) == 1);
    CHECK(p.cycles(3) == 0);
    CHECK(p.k2_components == 0);
}

TEST_CASE("encompass counts from the worked example") {
    Graph g = figure_graph();
    std::vector<int> h8{11, 21, 0, 12, 22, 8, 19, 20};
    std::vector<int> all(23);
    for (int v = 0; v < 23; ++v) all[v] = v;
    CHECK(encompass_count(g, h8, all) == 5);
    std::vector<int> non_stems;
    StructureProfile p = structure_profile(g);
    for (int v = 0; v < 23; ++v)
        if (!p.stems.count(v)) non_stems.push_back(v);
    CHECK(encompass_count(g, h8, non_stems) == 4);
    CHECK(encompass_count(g, {}, all) == 0);
}

TEST_CASE("top coefficients") {
    CHECK(d_top(Graph::path(4), 2) == 4);
    CHECK(d_top(Graph::disjoint_union({Graph::path(1), Graph::path(2)}), 1) == 2);
    CHECK(d_top(Graph::cycle(5), 1) == 5);
    CHECK_THROWS_AS(d_top(Graph::path(2), 2), std::invalid_argument);  // K2 component
}

TEST_CASE("general lower coefficients") {
    CHECK(d_n_minus_k(Graph::path(4), 2) == 4);
    CHECK(d_n_minus_k(Graph::path(5), 3) == 3);
    CHECK(d_n_minus_k(Graph::cycle(6), 2) == 15);
    CHECK_THROWS_AS(d_n_minus_k(Graph::path(4), 5), std::invalid_argument);
}

TEST_CASE("d(G,n-3) closed form") {
    CHECK(d_n_minus_3(Graph::path(5)) == 3);
    CHECK(d_n_minus_3(Graph::path(7)) == 22);
    CHECK(d_n_minus_3(Graph::cycle(3)) == 0);
}

TEST_CASE("d(G,n-4) closed form") {
    CHECK(d_n_minus_4(Graph::path(6)) == 1);
    CHECK(d_n_minus_4(Graph::path(9)) == 61);
    CHECK(d_n_minus_4(Graph::cycle(6)) == dom_poly_bruteforce(Graph::cycle(6)).coeffs[2]);
    // a non-stem vertex of degree 3 puts the graph outside the theorem's scope
    CHECK_THROWS_AS(d_n_minus_4(Graph::complete(5)), std::invalid_argument);
}

TEST_CASE("path top coefficient formulas") {
    auto five = path_top_coeffs(5);
    REQUIRE(five.size() == 4);
    CHECK(five[0] == 5);
    CHECK(five[1] == 8);
    CHECK(five[2] == 3);
    CHECK(five[3] == 0);
    auto eight = path_top_coeffs(8);
    CHECK(eight[1] == 26);
    CHECK(eight[2] == 40);
    CHECK(eight[3] == 26);
    CHECK(path_top_coeffs(4).size() == 3);  // the fourth form needs n >= 5
    CHECK(path_top_coeffs(2).size() == 1);
    CHECK_THROWS_AS(path_top_coeffs(1), std::invalid_argument);
}

TEST_CASE("closed forms at -1") {
    CHECK(closed_eval_minus1(Family::cycle, 8, 1) == -8);
    CHECK(closed_eval_minus1(Family::path, 6, 2) == 8);
    CHECK(closed_eval_minus1(Family::path, 7, 1) == -4);
    CHECK(closed_eval_minus1(Family::cycle, 8, 0) == 3);
    CHECK_THROWS_AS(closed_eval_minus1(Family::path, 5, 4), std::invalid_argument);
    CHECK_THROWS_AS(closed_eval_minus1(Family::cycle, 2, 0), std::invalid_argument);
}

TEST_CASE("ord3 tables and domination numbers") {
    CHECK(ord3_allowed(Family::cycle, 6) == std::set<unsigned long>{3});
    CHECK(ord3_allowed(Family::path, 5) == std::set<unsigned long>{2, 3});
    CHECK(ord3_allowed(Family::path, 3) == std::set<unsigned long>{1});
    CHECK(gamma_closed(Family::path, 1) == 1);
    CHECK(gamma_closed(Family::path, 7) == 3);
    CHECK(gamma_closed(Family::cycle, 9) == 3);
    CHECK(gamma_closed(Family::cycle, 9) == cycle_poly(9).gamma());
}
