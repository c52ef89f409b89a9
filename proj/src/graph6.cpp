#include "dompoly/graph.hpp"

namespace dompoly {

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 258047) throw std::invalid_argument("graph6: order too large");
    std::string head;
    if (n <= 62) {
        head.push_back(static_cast<char>(n + 63));
    } else {
        head.push_back(126);
        head.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        head.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        head.push_back(static_cast<char>((n & 63) + 63));
    }
    // Upper triangle, column-major: x(0,1), x(0,2), x(1,2), x(0,3), ...
    std::string bits;
    bits.reserve(static_cast<std::size_t>(n) * n / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v * 2 + (bits[k + b] == '1');
        head.push_back(static_cast<char>(v + 63));
    }
    return head;
}

Graph from_graph6(const std::string& bytes) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= bytes.size()) throw std::invalid_argument("graph6: truncated");
        int c = static_cast<unsigned char>(bytes[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad byte");
        return c;
    };
    int c = next();
    long n;
    if (c == 126) {
        // 258048+ would need the 8-byte form; we stop at the 4-byte one.
        if (pos < bytes.size() && static_cast<unsigned char>(bytes[pos]) == 126)
            throw std::invalid_argument("graph6: >>126 form unsupported");
        long a = next() - 63, b = next() - 63, d = next() - 63;
        n = (a << 12) | (b << 6) | d;
    } else {
        n = c - 63;
    }
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (bytes.size() - pos < nbytes) throw std::invalid_argument("graph6: truncated payload");
    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    int i = 0, j = 1;
    for (std::size_t k = 0; k < nbytes; ++k) {
        int v = next() - 63;
        for (int b = 5; b >= 0 && bit < nbits; --b, ++bit) {
            if ((v >> b) & 1) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

}  // namespace dompoly
