#include "dompoly/poly.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <thread>

namespace dompoly {

DomPolynomial DomPolynomial::times(const DomPolynomial& o) const {
    DomPolynomial r;
    r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs.size(); ++j)
            r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    }
    return r;
}

DomPolynomial DomPolynomial::derivative(int order) const {
    if (order < 0) throw std::invalid_argument("negative derivative order");
    DomPolynomial r = *this;
    for (int k = 0; k < order; ++k) {
        if (r.coeffs.size() <= 1) {
            r.coeffs = {mpz_class(0)};
            continue;
        }
        std::vector<mpz_class> d(r.coeffs.size() - 1);
        for (std::size_t i = 1; i < r.coeffs.size(); ++i) d[i - 1] = mpz_class(i) * r.coeffs[i];
        r.coeffs = std::move(d);
    }
    return r;
}

mpz_class DomPolynomial::evaluate(const mpz_class& x) const {
    mpz_class v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
}

int DomPolynomial::gamma() const {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) return static_cast<int>(i);
    throw std::invalid_argument("gamma of the zero polynomial");
}

std::string DomPolynomial::to_json() const {
    std::ostringstream out;
    out << "{\"n\": " << degree() << ", \"coeffs\": [";
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out << (i ? ", " : "") << '"' << coeffs[i].get_str() << '"';
    out << "]}";
    return out.str();
}

std::string DomPolynomial::to_text() const {
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (coeffs[i] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (coeffs[i] != 1 || i == 0) out << coeffs[i].get_str();
        if (i == 1)
            out << "x";
        else if (i > 1)
            out << "x^" << i;
    }
    if (first) out << "0";
    return out.str();
}

bool is_dominating(const Graph& g, const std::vector<int>& s) {
    const int words = g.words_per_row();
    std::vector<std::uint64_t> cov(words, 0);
    for (int v : s) {
        const std::uint64_t* row = g.closed_row(v);  // range-checks v
        for (int w = 0; w < words; ++w) cov[w] |= row[w];
    }
    const int n = g.order();
    for (int w = 0; w < words; ++w) {
        std::uint64_t full = (w == words - 1 && n % 64) ? ((1ull << (n % 64)) - 1) : ~0ull;
        if (cov[w] != full) return false;
    }
    return true;
}

namespace {

// Counts per cardinality fit in 64 bits for n <= 64 (at most C(64,32) < 2^63).
void brute_recurse(int v, int n, std::uint64_t covered, int size,
                   const std::vector<std::uint64_t>& closed,
                   const std::vector<std::uint64_t>& suffix_cover, std::uint64_t full,
                   std::vector<std::uint64_t>& counts) {
    if ((covered | suffix_cover[v]) != full) return;
    if (v == n) {
        ++counts[size];
        return;
    }
    brute_recurse(v + 1, n, covered, size, closed, suffix_cover, full, counts);
    brute_recurse(v + 1, n, covered | closed[v], size + 1, closed, suffix_cover, full, counts);
}

}  // namespace

DomPolynomial dom_poly_bruteforce(const Graph& g, const PolyConfig& cfg) {
    const int n = g.order();
    if (n > cfg.brute_force_cap || n > 64)
        throw cap_exceeded("brute force: order " + std::to_string(n) + " exceeds cap " +
                           std::to_string(std::min<long>(cfg.brute_force_cap, 64)));
    if (n == 0) return DomPolynomial::one();

    std::vector<std::uint64_t> closed(n);
    for (int v = 0; v < n; ++v) closed[v] = g.closed_row(v)[0];
    const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
    std::vector<std::uint64_t> suffix_cover(n + 1, 0);
    for (int v = n - 1; v >= 0; --v) suffix_cover[v] = suffix_cover[v + 1] | closed[v];

    // Split on the first `depth` vertices; blocks go to workers in a fixed
    // round-robin so per-size totals are identical for any worker count.
    int workers = std::max(1, cfg.workers);
    int depth = 0;
    if (workers > 1) depth = std::min(n, 10);
    const std::uint64_t blocks = 1ull << depth;
    workers = static_cast<int>(std::min<std::uint64_t>(workers, blocks));

    std::vector<std::vector<std::uint64_t>> partial(
        workers, std::vector<std::uint64_t>(n + 1, 0));
    auto run = [&](int w) {
        for (std::uint64_t blk = w; blk < blocks; blk += workers) {
            std::uint64_t covered = 0;
            int size = 0;
            for (int v = 0; v < depth; ++v)
                if ((blk >> v) & 1) {
                    covered |= closed[v];
                    ++size;
                }
            brute_recurse(depth, n, covered, size, closed, suffix_cover, full, partial[w]);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    DomPolynomial r;
    r.coeffs.assign(n + 1, 0);
    for (const auto& part : partial)
        for (int i = 0; i <= n; ++i) r.coeffs[i] += mpz_class(part[i]);
    return r;
}

namespace {

DomPolynomial shift_up(const DomPolynomial& p) {  // multiply by x
    DomPolynomial r;
    r.coeffs.assign(p.coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) r.coeffs[i + 1] = p.coeffs[i];
    return r;
}

DomPolynomial add3(const DomPolynomial& a, const DomPolynomial& b, const DomPolynomial& c) {
    DomPolynomial r;
    r.coeffs.assign(std::max({a.coeffs.size(), b.coeffs.size(), c.coeffs.size()}), 0);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        if (i < a.coeffs.size()) r.coeffs[i] += a.coeffs[i];
        if (i < b.coeffs.size()) r.coeffs[i] += b.coeffs[i];
        if (i < c.coeffs.size()) r.coeffs[i] += c.coeffs[i];
    }
    return r;
}

DomPolynomial from_ints(std::vector<long> v) {
    DomPolynomial r;
    for (long c : v) r.coeffs.emplace_back(c);
    return r;
}

DomPolynomial recurrence(int n, int base_lo, std::vector<DomPolynomial> window) {
    // window holds D(G_{base_lo}), D(G_{base_lo+1}), D(G_{base_lo+2})
    if (n < base_lo + 3) return window[n - base_lo];
    for (int m = base_lo + 3; m <= n; ++m) {
        DomPolynomial next = shift_up(add3(window[2], window[1], window[0]));
        window[0] = std::move(window[1]);
        window[1] = std::move(window[2]);
        window[2] = std::move(next);
    }
    return window[2];
}

}  // namespace

DomPolynomial path_poly(int n) {
    if (n < 1) throw std::invalid_argument("path_poly requires n >= 1");
    return recurrence(n, 1,
                      {from_ints({0, 1}), from_ints({0, 2, 1}), from_ints({0, 1, 3, 1})});
}

DomPolynomial cycle_poly(int n) {
    if (n < 3) throw std::invalid_argument("cycle_poly requires n >= 3");
    // C_3..C_5 bases are frozen from the brute-force oracle (regression
    // tested against it).
    return recurrence(n, 3,
                      {from_ints({0, 3, 3, 1}), from_ints({0, 0, 6, 4, 1}),
                       from_ints({0, 0, 5, 10, 5, 1})});
}

DomPolynomial chain_poly(int n, bool stem_chord) {
    if (n < 1 || (stem_chord && n < 5))
        throw std::invalid_argument("chain_poly: invalid order");

    // States per processed prefix: (vertex i chosen?, vertex i dominated
    // so far?) -> coefficient vector by subset size. When the chord is
    // present we condition on the membership of both chord endpoints.
    using State = std::array<std::vector<mpz_class>, 4>;  // index = in*2 + dom
    auto zero = [&] {
        State s;
        for (auto& v : s) v.assign(n + 1, 0);
        return s;
    };

    DomPolynomial result;
    result.coeffs.assign(n + 1, 0);

    const int cases = stem_chord ? 4 : 1;
    for (int cc = 0; cc < cases; ++cc) {
        const bool c1 = stem_chord && (cc & 1);       // vertex 1 in S
        const bool c2 = stem_chord && (cc & 2);       // vertex n-2 in S
        State cur = zero();
        for (int in0 = 0; in0 <= 1; ++in0) cur[in0 * 2 + in0][in0] = 1;

        for (int i = 1; i < n; ++i) {
            State next = zero();
            for (int st = 0; st < 4; ++st) {
                const bool prev_in = st & 2, prev_dom = st & 1;
                for (int c = 0; c <= 1; ++c) {
                    if (stem_chord && i == 1 && c != static_cast<int>(c1)) continue;
                    if (stem_chord && i == n - 2 && c != static_cast<int>(c2)) continue;
                    if (!prev_dom && !c) continue;  // v_{i-1} left undominated
                    bool dom = c || prev_in;
                    if (stem_chord && i == 1 && c2) dom = true;
                    if (stem_chord && i == n - 2 && c1) dom = true;
                    auto& dst = next[c * 2 + dom][0];
                    (void)dst;
                    for (int k = 0; k + c <= n; ++k) {
                        const mpz_class& src = cur[st][k];
                        if (src != 0) next[c * 2 + dom][k + c] += src;
                    }
                }
            }
            cur = std::move(next);
        }
        for (int in = 0; in <= 1; ++in)
            for (int k = 0; k <= n; ++k) result.coeffs[k] += cur[in * 2 + 1][k];
    }
    return result;
}

namespace {

enum class Shape { isolated, k2, path, cycle, tilde, other };

Shape classify_component(const Graph& c) {
    const int n = c.order();
    if (n == 1) return Shape::isolated;
    if (n == 2) return Shape::k2;
    const std::size_t m = c.edge_count();
    int deg1 = 0, deg2 = 0, deg3 = 0;
    for (int v = 0; v < n; ++v) {
        int d = c.degree(v);
        deg1 += d == 1;
        deg2 += d == 2;
        deg3 += d == 3;
    }
    if (deg2 == n) return Shape::cycle;
    if (m == static_cast<std::size_t>(n) - 1 && deg1 == 2 && deg2 == n - 2)
        return Shape::path;
    if (n >= 5 && deg1 == 2 && deg3 == 2 && deg2 == n - 4) {
        // two pendant edges on adjacent vertices of a cycle = ~P_n
        std::vector<int> stems;
        for (int v = 0; v < n; ++v)
            if (c.degree(v) == 1) stems.push_back(c.neighbors(v)[0]);
        if (stems[0] != stems[1] && c.degree(stems[0]) == 3 && c.degree(stems[1]) == 3 &&
            c.has_edge(stems[0], stems[1]))
            return Shape::tilde;
    }
    return Shape::other;
}

}  // namespace

DomPolynomial dom_poly(const Graph& g, const PolyConfig& cfg) {
    DomPolynomial result = DomPolynomial::one();
    for (const auto& comp : g.components()) {
        Graph c = g.induced(comp);
        DomPolynomial p;
        switch (classify_component(c)) {
            case Shape::isolated: p = from_ints({0, 1}); break;
            case Shape::k2: p = from_ints({0, 2, 1}); break;
            case Shape::path: p = path_poly(c.order()); break;
            case Shape::cycle: p = cycle_poly(c.order()); break;
            case Shape::tilde: p = chain_poly(c.order(), true); break;
            case Shape::other: p = dom_poly_bruteforce(c, cfg); break;
        }
        result = result.times(p);
    }
    return result;
}

unsigned long ord_p(const mpz_class& value, unsigned long p) {
    mpz_class pz(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("ord_p: p must be prime");
    if (value == 0) return 0;  // paper's convention
    mpz_class v = abs(value), q, r;
    unsigned long a = 0;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
        if (r != 0) return a;
        v = q;
        ++a;
    }
}

AlternationReport minus_two_alternation_check(Family family, int start, int end) {
    const int lo_min = family == Family::path ? 1 : 3;
    if (start < lo_min || end < start)
        throw std::invalid_argument("minus_two_alternation_check: bad range");
    AlternationReport rep;
    rep.family = family;
    rep.start = start;
    rep.end = end;
    auto poly_of = [&](int m) {
        return family == Family::path ? path_poly(m) : cycle_poly(m);
    };
    for (int m = start; m <= end; ++m) {
        rep.values.push_back(poly_of(m).evaluate(-2));
        if (rep.values.back() == 0) rep.zeros.push_back(m);
    }
    auto val = [&](int m) -> const mpz_class& { return rep.values[m - start]; };
    for (int m = start; m + 3 <= end && !rep.window_start; ++m) {
        bool ok = val(m) != 0;
        for (int i = 0; i < 3 && ok; ++i) {
            ok = sgn(val(m + i)) == -sgn(val(m + i + 1)) &&
                 abs(val(m + i)) < abs(val(m + i + 1));
        }
        if (ok) rep.window_start = m;
    }
    if (rep.window_start) {
        rep.nonzero_from_window = std::none_of(rep.zeros.begin(), rep.zeros.end(),
                                               [&](int z) { return z >= *rep.window_start; });
    }
    if (family == Family::path) {
        rep.path_nonzero_from_9 = std::none_of(rep.zeros.begin(), rep.zeros.end(),
                                               [&](int z) { return z >= 9; });
    }
    return rep;
}

}  // namespace dompoly
