#include "stp/graph6.hpp"

#include <cstdint>

namespace stp {

namespace {

constexpr int kBias = 63;  // printable range is 63..126

[[noreturn]] void fail(const std::string& why, size_t offset) {
    throw Error("graph6: " + why + " at byte " + std::to_string(offset));
}

int sextet(const std::string& s, size_t i) {
    if (i >= s.size()) fail("unexpected end of input", i);
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < kBias || c > 126) fail("invalid character '" + std::string(1, s[i]) + "'", i);
    return c - kBias;
}

}  // namespace

Graph parse_graph6(const std::string& line) {
    size_t pos = 0;
    if (line.empty()) fail("empty input", 0);
    long long n;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            fail("8-byte order header not supported", 0);
        n = (static_cast<long long>(sextet(line, 1)) << 12) |
            (sextet(line, 2) << 6) | sextet(line, 3);
        if (n <= 62) fail("long-form header used for small order", 0);
        pos = 4;
    } else {
        n = sextet(line, 0);
        pos = 1;
    }

    long long bits = n * (n - 1) / 2;
    size_t body = static_cast<size_t>((bits + 5) / 6);
    if (line.size() != pos + body)
        fail("expected " + std::to_string(pos + body) + " bytes, got " +
                 std::to_string(line.size()),
             line.size());

    std::vector<std::pair<int, int>> pairs;
    int cur = 0, mask = 0;
    size_t at = pos;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (mask == 0) {
                cur = sextet(line, at);
                ++at;
                mask = 0x20;
            }
            if (cur & mask) pairs.emplace_back(i, j);
            mask >>= 1;
        }
    }
    // Remaining bits of the final sextet must be zero padding.
    if (mask != 0 && (cur & (2 * mask - 1)) != 0)
        fail("nonzero padding bits", at - 1);
    return Graph::from_edges(static_cast<int>(n), pairs);
}

std::string write_graph6(const Graph& g) {
    long long n = g.order();
    if (n > 258047) throw Error("graph6: order " + std::to_string(n) + " too large to encode");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int cur = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(cur + kBias));
                cur = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((cur << (6 - filled)) + kBias));
    return out;
}

}  // namespace stp
