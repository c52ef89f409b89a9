#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "dompoly/graph.hpp"

namespace dompoly {

enum class Family { path, cycle };

/// D(G,x) as a dense coefficient vector; coeffs[i] = d(G,i), the number
/// of dominating sets of cardinality i. Degree equals |V(G)|.
struct DomPolynomial {
    std::vector<mpz_class> coeffs;

    static DomPolynomial one() { return {{mpz_class(1)}}; }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const DomPolynomial& o) const { return coeffs == o.coeffs; }

    DomPolynomial times(const DomPolynomial& o) const;
    DomPolynomial derivative(int order) const;
    mpz_class evaluate(const mpz_class& x) const;

    /// Index of the lowest nonzero coefficient = gamma(G).
    int gamma() const;

    /// {"n": int, "coeffs": ["...", ...]} with decimal-string coefficients.
    std::string to_json() const;
    std::string to_text() const;  // human form, highest power first
};

struct PolyConfig {
    int brute_force_cap = 26;
    int workers = 1;
};

bool is_dominating(const Graph& g, const std::vector<int>& s);

/// Exhaustive subset enumeration; requires order <= cap (and <= 64).
DomPolynomial dom_poly_bruteforce(const Graph& g, const PolyConfig& cfg = {});

/// Three-term recurrence from the P_1..P_3 / C_3..C_5 base cases.
DomPolynomial path_poly(int n);
DomPolynomial cycle_poly(int n);

/// Transfer DP along the path 0-1-...-(n-1), optionally with the
/// stem-stem chord {1, n-2}. An independent route to D(P_n) and the only
/// scalable route to D(~P_n).
DomPolynomial chain_poly(int n, bool stem_chord);

/// Component decomposition: recognized shapes (path, cycle, tilde path)
/// go through their closed routes, anything else through brute force.
DomPolynomial dom_poly(const Graph& g, const PolyConfig& cfg = {});

/// Largest a with p^a | value; ord_p(0) = 0 by convention.
unsigned long ord_p(const mpz_class& value, unsigned long p);

struct AlternationReport {
    Family family;
    int start = 0, end = 0;
    std::vector<mpz_class> values;        // D(G_m,-2), m in [start,end]
    std::optional<int> window_start;      // first m with the 4-term hypothesis
    bool nonzero_from_window = false;     // no zero at or after the window
    std::vector<int> zeros;               // m with D(G_m,-2) = 0 in range
    bool path_nonzero_from_9 = false;     // paths only: no zero in [max(9,start),end]
};

AlternationReport minus_two_alternation_check(Family family, int start, int end);

}  // namespace dompoly
