#pragma once

#include <gmpxx.h>

#include <set>
#include <vector>

#include "dompoly/graph.hpp"
#include "dompoly/poly.hpp"

namespace dompoly {

/// f_G(H,U): the number of v in U with N[v] contained in H.
int encompass_count(const Graph& g, const std::vector<int>& h, const std::vector<int>& u);

/// which=1: d(G,n-1) = n - r (r isolated vertices).
/// which=2: d(G,n-2) = C(n,2) - t (t degree-1 vertices); requires no
/// isolated vertices and no K_2 components.
mpz_class d_top(const Graph& g, int which);

/// General d(G,n-k) with the correction term evaluated by enumerating
/// all k-subsets. Requires no K_2 components and 2 <= k <= n - gamma(G).
mpz_class d_n_minus_k(const Graph& g, int k);

/// d(G,n-3) from the structure profile alone. Requires no isolated
/// vertices, no K_2 components, and n >= 3 + gamma(G).
mpz_class d_n_minus_3(const Graph& g);

/// d(G,n-4) for graphs where every non-stem vertex has degree <= 2.
/// Same component hypotheses as d_n_minus_3.
mpz_class d_n_minus_4(const Graph& g);

/// (d(P_n,n-1), ..., d(P_n,n-4)), truncated to the entries whose closed
/// forms are valid at this n (all four once n >= 5). n <= 1 is an error.
std::vector<mpz_class> path_top_coeffs(int n);

/// Closed form for the order-th derivative of D at -1, selected by
/// n mod 4. Exact rationals internally; the result is checked to be an
/// integer before returning.
mpq_class closed_eval_minus1(Family family, int n, int order);

/// Admissible values of ord_3(D(.,-3)) per the mod-3 tables. Singleton
/// except paths with n = 2 mod 3 and cycles with n = 1 mod 3.
std::set<unsigned long> ord3_allowed(Family family, int n);

/// ceil(n/3), the domination number of both P_n and C_n.
int gamma_closed(Family family, int n);

}  // namespace dompoly
