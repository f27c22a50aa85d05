#include "specfac/graph6.hpp"

#include <stdexcept>

namespace specfac {

namespace {
constexpr int kOffset = 63;
constexpr std::string_view kHeaderPrefix = ">>graph6<<";
}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else {
        out.push_back(126);  // '~', then 18-bit big-endian order
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kOffset));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kOffset));
        out.push_back(static_cast<char>((n & 0x3f) + kOffset));
    }
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kOffset));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kOffset));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.substr(0, kHeaderPrefix.size()) == kHeaderPrefix) text.remove_prefix(kHeaderPrefix.size());
    if (text.empty()) throw std::invalid_argument("graph6: empty input");

    auto value = [&](std::size_t pos) -> int {
        const unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - kOffset;
    };

    std::size_t pos = 0;
    long n;
    if (text[0] == 126) {
        if (text.size() >= 2 && text[1] == 126) throw std::invalid_argument("graph6: order exceeds 64");
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated long-form header");
        n = (static_cast<long>(value(1)) << 12) | (value(2) << 6) | value(3);
        pos = 4;
    } else {
        n = value(0);
        pos = 1;
    }
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("graph6: order out of supported range [1, 64]");

    const long bits_needed = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (text.size() - pos != body) throw std::invalid_argument("graph6: body length mismatch");

    Graph g(static_cast<int>(n));
    long k = 0;
    int chunk = 0, avail = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (avail == 0) {
                chunk = value(pos++);
                avail = 6;
            }
            if ((chunk >> (avail - 1)) & 1) g.add_edge(i, j);
            --avail;
        }
    }
    if (avail > 0 && (chunk & ((1 << avail) - 1)) != 0)
        throw std::invalid_argument("graph6: nonzero padding bits");
    return g;
}

}  // namespace specfac
