#include "stp/extremal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace stp {

Graph complete_graph(int n) {
    if (n < 1) throw Error("complete_graph: n must be >= 1");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return Graph::from_edges(n, pairs);
}

FamilyGraph family_graph(int n, int n1, const CrossPattern& pattern) {
    if (n1 < 1 || n1 > n - 1)
        throw Error("family_graph: need 1 <= n1 <= n-1");
    int n2 = n - n1;
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : pattern.links) {
        if (a < 0 || a >= n1 || b < 0 || b >= n2)
            throw Error("family_graph: link (" + std::to_string(a) + "," + std::to_string(b) +
                        ") out of range");
        if (!seen.insert({a, b}).second)
            throw Error("family_graph: duplicate link");
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) pairs.emplace_back(i, j);
    for (int i = 0; i < n2; ++i)
        for (int j = i + 1; j < n2; ++j) pairs.emplace_back(n1 + i, n1 + j);
    for (auto [a, b] : pattern.links) pairs.emplace_back(a, n1 + b);
    FamilyGraph fg;
    fg.graph = Graph::from_edges(n, pairs);
    fg.n = n;
    fg.n1 = n1;
    fg.pattern = pattern;
    fg.pattern.left_size = n1;
    fg.pattern.right_size = n2;
    return fg;
}

Graph book_graph(int n, int delta, int i) {
    if (delta < 0 || n < delta + 2)
        throw Error("book_graph: need n >= delta+2");
    if (i < 0 || i > n - delta - 1)
        throw Error("book_graph: need 0 <= i <= n-delta-1");
    CrossPattern p;
    for (int j = 0; j < i; ++j) p.links.emplace_back(0, j);
    return family_graph(n, delta + 1, p).graph;
}

Graph join_candidate(int n, int k) {
    if (k < 1) throw Error("join_candidate: k must be >= 1");
    if (n <= 2 * k) throw Error("join_candidate: need n >= 2k+1");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    for (int i = k; i < 2 * k; ++i)
        for (int j = i + 1; j < 2 * k; ++j) pairs.emplace_back(i, j);
    for (int i = 0; i < k; ++i)
        for (int j = k; j < n; ++j) pairs.emplace_back(i, j);
    return Graph::from_edges(n, pairs);
}

namespace {

using Links = std::vector<std::pair<int, int>>;

// Smallest relabeling of a pattern under independent permutations of its
// used rows and columns.
Links canonical_links(const Links& links, int rows, int cols) {
    std::vector<int> rperm(rows), cperm(cols);
    std::iota(rperm.begin(), rperm.end(), 0);
    Links best;
    bool have = false;
    do {
        std::iota(cperm.begin(), cperm.end(), 0);
        do {
            Links cur;
            cur.reserve(links.size());
            for (auto [r, c] : links) cur.emplace_back(rperm[r], cperm[c]);
            std::sort(cur.begin(), cur.end());
            if (!have || cur < best) {
                best = std::move(cur);
                have = true;
            }
        } while (std::next_permutation(cperm.begin(), cperm.end()));
    } while (std::next_permutation(rperm.begin(), rperm.end()));
    return best;
}

}  // namespace

std::vector<FamilyGraph> enumerate_family(int n, int n1, int i) {
    if (n1 < 1 || n1 > n - 1)
        throw Error("enumerate_family: need 1 <= n1 <= n-1");
    long long cells = static_cast<long long>(n1) * (n - n1);
    if (i < 0 || i > cells)
        throw Error("enumerate_family: i out of range");
    if (n > 64 || i > 4)
        throw Error("enumerate_family: exhaustive mode limited to n <= 64, i <= 4");

    // A representative can always be relabeled so the used left vertices
    // are 0..a-1 and used right vertices 0..b-1 with a,b <= i. Enumerate
    // i-subsets of that grid and keep one canonical pattern per orbit.
    int rows = std::min(i, n1), colsmax = std::min(i, n - n1);
    std::set<Links> canon;
    int total = rows * colsmax;
    std::vector<int> cell(i);
    std::function<void(int, int)> choose = [&](int idx, int from) {
        if (idx == i) {
            Links links;
            int rmax = -1, cmax = -1;
            std::vector<char> rused(rows, 0), cused(colsmax, 0);
            for (int t = 0; t < i; ++t) {
                int r = cell[t] / colsmax, c = cell[t] % colsmax;
                links.emplace_back(r, c);
                rused[r] = 1;
                cused[c] = 1;
                rmax = std::max(rmax, r);
                cmax = std::max(cmax, c);
            }
            // Used rows and columns must form prefixes; other placements are
            // relabelings of ones we already visit.
            for (int r = 0; r <= rmax; ++r)
                if (!rused[r]) return;
            for (int c = 0; c <= cmax; ++c)
                if (!cused[c]) return;
            canon.insert(canonical_links(links, rmax + 1, cmax + 1));
            return;
        }
        for (int at = from; at < total; ++at) {
            cell[idx] = at;
            choose(idx + 1, at + 1);
        }
    };
    if (i == 0) {
        canon.insert(Links{});
    } else if (total > 0) {
        choose(0, 0);
    }

    std::vector<FamilyGraph> out;
    out.reserve(canon.size());
    for (const auto& links : canon) {
        CrossPattern p;
        p.links = links;
        out.push_back(family_graph(n, n1, p));
    }
    return out;
}

}  // namespace stp
