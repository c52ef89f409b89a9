#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dompoly/poly.hpp"

using namespace dompoly;

namespace {

DomPolynomial poly_of(std::vector<long> v) {
    DomPolynomial p;
    for (long c : v) p.coeffs.emplace_back(c);
    return p;
}

}  // namespace

TEST_CASE("path polynomials match the published table") {
    CHECK(path_poly(1) == poly_of({0, 1}));
    CHECK(path_poly(2) == poly_of({0, 2, 1}));
    CHECK(path_poly(3) == poly_of({0, 1, 3, 1}));
    CHECK(path_poly(4) == poly_of({0, 0, 4, 4, 1}));
    CHECK(path_poly(5) == poly_of({0, 0, 3, 8, 5, 1}));
    CHECK(path_poly(6) == poly_of({0, 0, 1, 10, 13, 6, 1}));
    CHECK(path_poly(7) == poly_of({0, 0, 0, 8, 22, 19, 7, 1}));
    CHECK(path_poly(8) == poly_of({0, 0, 0, 4, 26, 40, 26, 8, 1}));
}

TEST_CASE("recurrences agree with brute force") {
    for (int n = 1; n <= 12; ++n)
        CHECK(path_poly(n) == dom_poly_bruteforce(Graph::path(n)));
    for (int n = 3; n <= 12; ++n)
        CHECK(cycle_poly(n) == dom_poly_bruteforce(Graph::cycle(n)));
}

TEST_CASE("chain transfer matrix is an independent oracle") {
    for (int n = 1; n <= 30; ++n) CHECK(chain_poly(n, false) == path_poly(n));
    for (int n = 5; n <= 12; ++n)
        CHECK(chain_poly(n, true) == dom_poly_bruteforce(Graph::tilde_path(n)));
}

TEST_CASE("dom_poly decomposes over components") {
    Graph g = Graph::disjoint_union({Graph::path(4), Graph::cycle(5), Graph::path(1)});
    CHECK(dom_poly(g) == path_poly(4).times(cycle_poly(5)).times(path_poly(1)));
    // unrecognized component goes through brute force
    Graph k4 = Graph::complete(4);
    CHECK(dom_poly(k4) == dom_poly_bruteforce(k4));
}

TEST_CASE("is_dominating") {
    Graph p = Graph::path(5);
    CHECK(is_dominating(p, {1, 3}));
    CHECK_FALSE(is_dominating(p, {0, 1}));
    CHECK(is_dominating(Graph::cycle(3), {2}));
}

TEST_CASE("brute force respects the cap and worker count") {
    PolyConfig small;
    small.brute_force_cap = 5;
    CHECK_THROWS_AS(dom_poly_bruteforce(Graph::path(6), small), cap_exceeded);

    PolyConfig par;
    par.workers = 4;
    CHECK(dom_poly_bruteforce(Graph::cycle(11), par) == cycle_poly(11));
}

TEST_CASE("polynomial arithmetic helpers") {
    DomPolynomial p = path_poly(4);
    CHECK(p.degree() == 4);
    CHECK(p.gamma() == 2);
    CHECK(p.evaluate(1) == 9);
    CHECK(p.evaluate(-2) == 0);
    CHECK(p.derivative(1) == poly_of({0, 8, 12, 4}));
    CHECK(p.derivative(5) == poly_of({0}));
    CHECK(p.to_text() == "x^4 + 4x^3 + 4x^2");
    CHECK(path_poly(1).to_json() == "{\"n\": 1, \"coeffs\": [\"0\", \"1\"]}");
    CHECK_THROWS_AS(poly_of({0, 0}).gamma(), std::invalid_argument);
}

TEST_CASE("ord_p") {
    CHECK(ord_p(54, 3) == 3);
    CHECK(ord_p(-8, 2) == 3);
    CHECK(ord_p(7, 3) == 0);
    CHECK(ord_p(0, 5) == 0);
    CHECK_THROWS_AS(ord_p(10, 4), std::invalid_argument);
}

TEST_CASE("behavior of D(P_n,-2)") {
    AlternationReport rep = minus_two_alternation_check(Family::path, 1, 40);
    CHECK(rep.zeros == std::vector<int>{2, 4, 7, 8});
    CHECK(rep.window_start.has_value());
    // the four-term hypothesis first holds one step before the published
    // anchor: 16, -32, 64, -96 already qualifies
    CHECK(*rep.window_start == 12);
    CHECK(rep.nonzero_from_window);
    CHECK(rep.path_nonzero_from_9);
    CHECK(rep.values[12] == -32);
    CHECK(rep.values[13] == 64);
    CHECK(rep.values[14] == -96);
}
