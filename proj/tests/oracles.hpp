#pragma once

// Deliberately naive reference implementations. They share nothing with the
// library beyond the Graph container.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace oracle {

using rainbow::Graph;
using Colors = std::vector<int>;

inline bool shares_vertex(const Graph& g, std::size_t a, std::size_t b)
{
    auto ea = g.edges()[a], eb = g.edges()[b];
    return ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v;
}

inline bool proper(const Graph& g, const Colors& c)
{
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b)
            if (c[a] == c[b] && shares_vertex(g, a, b))
                return false;
    return true;
}

/// First occurrences of colors appear in order 0, 1, 2, ...
inline bool first_occurrence_form(const Colors& c)
{
    int next = 0;
    for (int x : c) {
        if (x > next)
            return false;
        if (x == next)
            ++next;
    }
    return true;
}

/// Every vector in [0, q)^m, filtered to proper canonical colorings.
inline std::set<Colors> colorings_by_filter(const Graph& g, int q)
{
    const std::size_t m = g.size();
    std::set<Colors> out;
    Colors c(m, 0);
    if (m == 0) {
        out.insert(c);
        return out;
    }
    if (q <= 0)
        return out;
    while (true) {
        if (first_occurrence_form(c) && proper(g, c))
            out.insert(c);
        std::size_t i = 0;
        while (i < m && ++c[i] == q)
            c[i++] = 0;
        if (i == m)
            break;
    }
    return out;
}

/// All set partitions of the edge set whose blocks are matchings, as
/// block-index vectors (blocks numbered by first element).
inline std::vector<Colors> matching_partitions(const Graph& g)
{
    std::vector<Colors> out;
    std::vector<std::vector<std::size_t>> blocks;
    Colors c(g.size(), -1);
    std::function<void(std::size_t)> rec = [&](std::size_t e) {
        if (e == g.size()) {
            out.push_back(c);
            return;
        }
        for (std::size_t b = 0; b <= blocks.size(); ++b) {
            if (b == blocks.size())
                blocks.emplace_back();
            bool ok = std::none_of(blocks[b].begin(), blocks[b].end(),
                                   [&](std::size_t f) { return shares_vertex(g, e, f); });
            if (ok) {
                blocks[b].push_back(e);
                c[e] = static_cast<int>(b);
                rec(e + 1);
                blocks[b].pop_back();
            }
            if (blocks[b].empty())
                blocks.pop_back();
        }
    };
    rec(0);
    return out;
}

inline int unique_among(const Colors& embedded)
{
    int u = 0;
    for (int x : embedded)
        u += std::count(embedded.begin(), embedded.end(), x) == 1;
    return u;
}

inline std::set<int> spectrum(const Graph& g)
{
    std::set<int> s;
    for (const auto& c : matching_partitions(g))
        s.insert(unique_among(c));
    return s;
}

/// Every injective vertex map (as a vector) that carries edges to edges.
inline std::set<std::vector<int>> embeddings(const Graph& pattern, const Graph& host)
{
    std::set<std::vector<int>> out;
    const int p = pattern.order(), n = host.order();
    if (p > n)
        return out;
    std::vector<int> pick(static_cast<std::size_t>(n));
    std::iota(pick.begin(), pick.end(), 0);
    // all permutations, keeping the first p entries; duplicates collapse in the set
    do {
        std::vector<int> map(pick.begin(), pick.begin() + p);
        bool ok = true;
        for (auto [u, v] : pattern.edges())
            if (!host.adjacent(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)])) {
                ok = false;
                break;
            }
        if (ok)
            out.insert(map);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

inline bool contains(const Graph& pattern, const Graph& host) { return !embeddings(pattern, host).empty(); }

/// Host edge indices for an embedding given as a vertex map.
inline std::vector<std::size_t> image_edges(const Graph& pattern, const Graph& host, const std::vector<int>& map)
{
    std::vector<std::size_t> out;
    for (auto [u, v] : pattern.edges()) {
        int a = std::min(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);
        int b = std::max(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);
        for (std::size_t i = 0; i < host.size(); ++i)
            if (host.edges()[i].u == a && host.edges()[i].v == b)
                out.push_back(i);
    }
    return out;
}

inline bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    std::vector<int> p(static_cast<std::size_t>(a.order()));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.adjacent(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Max over all labeled n-vertex graphs with `pred` true, scanning edge counts
/// downward; returns the first edge count with a satisfying graph.
template <class Pred>
std::size_t max_edges_labeled(int n, Pred&& pred)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    const std::size_t t = pairs.size();
    std::map<std::size_t, std::vector<unsigned>, std::greater<>> by_size;
    for (unsigned mask = 0; mask < (1u << t); ++mask)
        by_size[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
    for (auto& [m, masks] : by_size)
        for (auto mask : masks) {
            std::vector<rainbow::Edge> e;
            for (std::size_t p = 0; p < t; ++p)
                if (mask >> p & 1u)
                    e.push_back({pairs[p].first, pairs[p].second});
            if (pred(Graph(n, e)))
                return m;
        }
    return 0;
}

} // namespace oracle

namespace fixtures {

using rainbow::Graph;

/// Named test graphs: the paper's families at small sizes plus a few irregular
/// and random graphs.
inline std::vector<std::pair<std::string, Graph>> corpus()
{
    using namespace rainbow;
    std::vector<std::pair<std::string, Graph>> out;
    for (int k = 1; k <= 8; ++k)
        out.emplace_back("P" + std::to_string(k), make_path(k));
    for (int k = 3; k <= 8; ++k)
        out.emplace_back("C" + std::to_string(k), make_cycle(k));
    for (int n = 2; n <= 4; ++n)
        out.emplace_back("K" + std::to_string(n), make_complete(n));
    for (int r = 0; r <= 4; ++r)
        for (int s = r; r + s + 1 <= 8; ++s)
            out.emplace_back("DS" + std::to_string(r) + std::to_string(s), make_double_star(r, s));
    out.emplace_back("B3_2", make_broom(3, 2));
    out.emplace_back("B4_3", make_broom(4, 3));
    out.emplace_back("CAT101", make_caterpillar({1, 0, 1}));
    out.emplace_back("CAT111", make_caterpillar({1, 1, 1}));
    out.emplace_back("CAT0201", make_caterpillar({0, 2, 0, 1}));
    out.emplace_back("T22", make_perfect_kary(2, 2));
    out.emplace_back("K4-e", Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}));
    out.emplace_back("bull", Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}));
    out.emplace_back("K23", Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}));
    out.emplace_back("C4+chord+tail", Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 4}, {4, 5}}));
    out.emplace_back("2K3", Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}));
    std::mt19937 rng(20240611);
    for (int i = 0; i < 6; ++i) {
        const int n = 5 + i % 3;
        std::vector<rainbow::Edge> all;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                all.push_back({a, b});
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(static_cast<std::size_t>(5 + i % 4));
        out.emplace_back("rand" + std::to_string(i), Graph(n, all));
    }
    return out;
}

} // namespace fixtures
