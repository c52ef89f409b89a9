#include "dompoly/coeffs.hpp"

#include <algorithm>
#include <numeric>

#include "dompoly/structure.hpp"

namespace dompoly {

namespace {

mpz_class binom(long n, unsigned long k) {
    if (n < 0 || static_cast<unsigned long>(n) < k) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

bool subset_of(const std::uint64_t* row, const std::vector<std::uint64_t>& mask) {
    for (std::size_t w = 0; w < mask.size(); ++w)
        if (row[w] & ~mask[w]) return false;
    return true;
}

void require_no_isolated(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument("formula requires no isolated vertices");
}

void require_no_k2(const Graph& g) {
    for (const auto& comp : g.components())
        if (comp.size() == 2)
            throw std::invalid_argument("formula requires no K_2 components");
}

}  // namespace

int encompass_count(const Graph& g, const std::vector<int>& h, const std::vector<int>& u) {
    std::vector<std::uint64_t> mask(g.words_per_row(), 0);
    for (int v : h) {
        if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
        mask[v / 64] |= 1ull << (v % 64);
    }
    int count = 0;
    for (int v : u)
        if (subset_of(g.closed_row(v), mask)) ++count;
    return count;
}

mpz_class d_top(const Graph& g, int which) {
    const int n = g.order();
    if (which == 1) {
        int r = 0;
        for (int v = 0; v < n; ++v) r += g.degree(v) == 0;
        return mpz_class(n - r);
    }
    if (which != 2) throw std::invalid_argument("d_top: which must be 1 or 2");
    require_no_isolated(g);
    require_no_k2(g);
    int t = 0;
    for (int v = 0; v < n; ++v) t += g.degree(v) == 1;
    return binom(n, 2) - t;
}

mpz_class d_n_minus_k(const Graph& g, int k) {
    const int n = g.order();
    require_no_k2(g);
    int gamma = dom_poly(g).gamma();
    if (k < 2 || k > n - gamma)
        throw std::invalid_argument("d_n_minus_k: k out of range [2, n - gamma]");

    StructureProfile prof = structure_profile(g);

    mpz_class sum = 0;
    for (int i = 0; i < k; ++i)
        sum += mpz_class(prof.t(i)) * binom(n - i - 1, k - i - 1);

    // Correction: over all k-subsets H, max(f_G(H, V-W) - 1, 0).
    std::vector<int> non_stems;
    for (int v = 0; v < n; ++v)
        if (!prof.stems.count(v)) non_stems.push_back(v);

    mpz_class corr = 0;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    const int words = g.words_per_row();
    std::vector<std::uint64_t> mask(words, 0);
    for (;;) {
        std::fill(mask.begin(), mask.end(), 0);
        for (int v : idx) mask[v / 64] |= 1ull << (v % 64);
        int f = 0;
        for (int v : non_stems)
            if (subset_of(g.closed_row(v), mask)) ++f;
        if (f > 1) corr += f - 1;

        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }

    return binom(n, k) - (sum - corr);
}

mpz_class d_n_minus_3(const Graph& g) {
    const int n = g.order();
    require_no_isolated(g);
    require_no_k2(g);
    if (n < 3) throw std::invalid_argument("d_n_minus_3: need n >= 3");
    StructureProfile p = structure_profile(g);
    mpz_class inner = mpz_class(p.t(1)) * (n - 2) + p.t(2);
    for (const auto& [stem, si] : p.stem_leaves) inner -= binom(si.size(), 2);
    inner -= p.loop_count(3);
    inner -= 2 * p.cycles(3);
    return binom(n, 3) - inner;
}

mpz_class d_n_minus_4(const Graph& g) {
    const int n = g.order();
    require_no_isolated(g);
    require_no_k2(g);
    if (!is_in_Gk(g, 2))
        throw std::invalid_argument("d_n_minus_4: non-stem vertex of degree > 2");
    if (n < 4) throw std::invalid_argument("d_n_minus_4: need n >= 4");
    StructureProfile p = structure_profile(g);

    mpq_class a1 = 0, a2 = 0, a3 = 0;
    for (const auto& [stem, si] : p.stem_leaves) {
        const long s = static_cast<long>(si.size());
        a1 += mpq_class(binom(s, 2)) * (n - s - 1);
        a1 += mpq_class(s, 2) * (p.t(1) - s);
        a1 += 2 * mpq_class(binom(s, 3));
        a3 += mpq_class(p.loop_count_at(3, stem)) * (n - 4 - s);
    }
    for (const auto& [stem, v1i] : p.v1) {
        a2 += mpq_class(v1i.size()) * p.stem_leaves.at(stem).size();
        a3 += mpq_class(static_cast<long>(v1i.size()), 2);
    }
    for (const auto& [stems, v2ij] : p.v2) {
        // the i != j sums count each unordered stem pair once
        const long si = static_cast<long>(p.stem_leaves.at(stems.first).size());
        const long sj = static_cast<long>(p.stem_leaves.at(stems.second).size());
        a2 += mpq_class(v2ij.size()) * (si + sj);
        a3 += mpq_class(binom(v2ij.size(), 2));
    }
    a3 += static_cast<long>(p.v0.size());
    a3 -= p.cycles(4);
    a3 += mpq_class(p.cycles(3)) * (2 * n - 9);

    mpq_class inner = mpq_class(p.t(1)) * binom(n - 2, 2) +
                      mpq_class(p.t(2)) * (n - 3) - a1 - a2 - a3;
    mpq_class value = mpq_class(binom(n, 4)) - inner;
    value.canonicalize();
    if (value.get_den() != 1)
        throw std::logic_error("d_n_minus_4: non-integer result");
    return value.get_num();
}

std::vector<mpz_class> path_top_coeffs(int n) {
    if (n <= 1) throw std::invalid_argument("path_top_coeffs: n must be at least 2");
    std::vector<mpz_class> out;
    out.push_back(n);                                           // n >= 2
    if (n >= 3) out.push_back(binom(n, 2) - 2);                 // n >= 3
    if (n >= 4) out.push_back(binom(n, 3) - (3L * n - 8));      // n >= 4
    if (n >= 5)
        out.push_back(binom(n, 4) - (2L * n * n - 13L * n + 20));
    return out;
}

mpq_class closed_eval_minus1(Family family, int n, int order) {
    if (order < 0 || order > 3)
        throw std::invalid_argument("closed_eval_minus1: order must be 0..3");
    if (n < (family == Family::cycle ? 3 : 1))
        throw std::invalid_argument("closed_eval_minus1: n too small");
    const int m = n % 4;
    const mpq_class N(n);
    mpq_class v;
    if (family == Family::cycle) {
        switch (order) {
            case 0: v = m == 0 ? 3 : -1; break;
            case 1:
                v = m == 0 ? -N : m == 1 ? N : mpq_class(0);
                break;
            case 2:
                switch (m) {
                    case 0: v = N * (N - 4) / 4; break;
                    case 1: v = -N * (N - 1) / 2; break;
                    case 2: v = N * (N + 2) / 4; break;
                    default: v = 0;
                }
                break;
            default:
                switch (m) {
                    case 0: v = -N * N * N / 16 + 3 * N * N / 4 - 2 * N; break;
                    case 1: v = 3 * N * N * N / 16 - 9 * N * N / 8 + 15 * N / 16; break;
                    case 2: v = -3 * N * N * N / 16 + 3 * N / 4; break;
                    default: v = N * N * N / 16 + 3 * N * N / 8 + 5 * N / 16;
                }
        }
    } else {
        switch (order) {
            case 0: v = (m == 0 || m == 3) ? 1 : -1; break;
            case 1:
                v = m == 1 ? (N + 1) / 2 : m == 3 ? -(N + 1) / 2 : mpq_class(0);
                break;
            case 2:
                switch (m) {
                    case 0: v = -N * (N + 4) / 8; break;
                    case 1: v = -(N - 1) * (N - 1) / 8; break;
                    case 2: v = (N + 2) * (N + 2) / 8; break;
                    default: v = (N - 3) * (N + 1) / 8;
                }
                break;
            default:
                switch (m) {
                    case 0: v = N * N * N / 16 - N; break;
                    case 1: v = -9 * N * N / 16 + 3 * N / 8 + mpq_class(3, 16); break;
                    case 2: v = -N * N * N / 16 + N / 4; break;
                    default: v = 9 * N * N / 16 + 3 * N / 8 - mpq_class(3, 16);
                }
        }
    }
    v.canonicalize();
    if (v.get_den() != 1)
        throw std::logic_error("closed_eval_minus1: table gave a non-integer");
    return v;
}

std::set<unsigned long> ord3_allowed(Family family, int n) {
    if (n < (family == Family::cycle ? 3 : 1))
        throw std::invalid_argument("ord3_allowed: n too small");
    const unsigned long c = (n + 2) / 3;  // ceil(n/3)
    const int m = n % 3;
    if (family == Family::cycle) {
        if (m == 0) return {c + 1};
        if (m == 1) return {c, c + 1};
        return {c};
    }
    if (m == 2) return {c, c + 1};
    return {c};
}

int gamma_closed(Family family, int n) {
    if (n < (family == Family::cycle ? 3 : 1))
        throw std::invalid_argument("gamma_closed: n too small");
    return (n + 2) / 3;
}

}  // namespace dompoly
