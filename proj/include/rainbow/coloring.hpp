#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

using Color = int;

/// Colors are tracked in 64-bit masks by the enumerator.
inline constexpr int kMaxEnumeratedColors = 64;

/// True iff no two edges sharing a vertex carry the same color.
inline bool is_proper(const Graph& g, std::span<const Color> colors)
{
    if (colors.size() != g.size())
        throw std::invalid_argument("is_proper: coloring length does not match edge count");
    for (Vertex v = 0; v < g.order(); ++v) {
        auto inc = g.incident_edges(v);
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                if (colors[inc[a]] == colors[inc[b]])
                    return false;
    }
    return true;
}

/// First-occurrence canonical form: edge 0 has color 0 and every edge's color
/// is at most one more than the largest color on earlier edges.
inline bool is_canonical(std::span<const Color> colors)
{
    Color top = -1;
    for (auto c : colors) {
        if (c < 0 || c > top + 1)
            return false;
        top = std::max(top, c);
    }
    return true;
}

inline std::vector<Color> canonical_relabel(std::span<const Color> colors)
{
    std::map<Color, Color> relabel;
    std::vector<Color> out;
    out.reserve(colors.size());
    for (auto c : colors) {
        auto [it, fresh] = relabel.try_emplace(c, static_cast<Color>(relabel.size()));
        out.push_back(it->second);
    }
    return out;
}

/// Total, proper edge coloring of a specific graph (edge index -> color id).
class EdgeColoring {
public:
    EdgeColoring() = default;

    EdgeColoring(const Graph& g, std::vector<Color> colors) : colors_(std::move(colors))
    {
        for (auto c : colors_)
            if (c < 0)
                throw std::invalid_argument("edge coloring: negative color id");
        if (!is_proper(g, colors_))
            throw std::invalid_argument("edge coloring: not proper");
    }

    /// For colorings the caller has already validated (enumerator output).
    static EdgeColoring unchecked(std::vector<Color> colors)
    {
        EdgeColoring c;
        c.colors_ = std::move(colors);
        return c;
    }

    std::span<const Color> colors() const noexcept { return colors_; }
    const std::vector<Color>& vector() const noexcept { return colors_; }
    std::size_t size() const noexcept { return colors_.size(); }
    Color operator[](EdgeIndex i) const { return colors_.at(i); }

    std::size_t num_colors() const
    {
        std::vector<Color> c = colors_;
        std::sort(c.begin(), c.end());
        return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
    }

    bool is_canonical() const { return rainbow::is_canonical(colors_); }

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
    friend auto operator<=>(const EdgeColoring& a, const EdgeColoring& b) { return a.colors_ <=> b.colors_; }

private:
    std::vector<Color> colors_;
};

/// Every edge a distinct color.
inline EdgeColoring rainbow_coloring(const Graph& g)
{
    std::vector<Color> c(g.size());
    std::iota(c.begin(), c.end(), 0);
    return EdgeColoring::unchecked(std::move(c));
}

// ---------------------------------------------------------------------------
// Color classes

/// Color class sizes, largest first.
struct ColorClassProfile {
    std::vector<std::size_t> sizes;

    std::size_t largest() const { return sizes.empty() ? 0 : sizes.front(); }
    std::size_t smallest() const { return sizes.empty() ? 0 : sizes.back(); }
    friend bool operator==(const ColorClassProfile&, const ColorClassProfile&) = default;
};

inline ColorClassProfile color_class_profile(const EdgeColoring& c)
{
    std::map<Color, std::size_t> count;
    for (auto col : c.colors())
        ++count[col];
    ColorClassProfile p;
    for (const auto& [col, n] : count)
        p.sizes.push_back(n);
    std::sort(p.sizes.rbegin(), p.sizes.rend());
    return p;
}

/// Edge indices of each color class, keyed by color.
inline std::map<Color, std::vector<EdgeIndex>> color_classes(std::span<const Color> colors)
{
    std::map<Color, std::vector<EdgeIndex>> classes;
    for (EdgeIndex i = 0; i < colors.size(); ++i)
        classes[colors[i]].push_back(i);
    return classes;
}

// ---------------------------------------------------------------------------
// Canonical enumeration

struct EnumerationOptions {
    int max_colors = kMaxEnumeratedColors;
    /// Number of color assignments tried before giving up.
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
    /// Fixed canonical proper assignment of the first edges; the search covers
    /// only completions of it.
    std::vector<Color> prefix;
};

struct EnumerationStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t pruned = 0;
    bool budget_exhausted = false;
    bool stopped = false;

    bool exhaustive() const noexcept { return !budget_exhausted && !stopped; }

    EnumerationStats& operator+=(const EnumerationStats& o)
    {
        nodes += o.nodes;
        leaves += o.leaves;
        pruned += o.pruned;
        budget_exhausted = budget_exhausted || o.budget_exhausted;
        stopped = stopped || o.stopped;
        return *this;
    }
};

/// Never prunes.
struct NoPruning {
    bool operator()(std::span<const Color>, EdgeIndex) const noexcept { return false; }
};

namespace detail {

/// For each edge, the smaller-indexed edges sharing an endpoint with it.
inline std::vector<std::vector<EdgeIndex>> earlier_conflicts(const Graph& g)
{
    std::vector<std::vector<EdgeIndex>> out(g.size());
    for (EdgeIndex i = 0; i < g.size(); ++i) {
        for (auto v : {g.edge(i).u, g.edge(i).v})
            for (auto j : g.incident_edges(v))
                if (j < i)
                    out[i].push_back(j);
    }
    return out;
}

template <class Visitor, class Pruner>
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, const EnumerationOptions& opt, Visitor& visit, Pruner& prune)
        : g_(g), opt_(opt), visit_(visit), prune_(prune), conflicts_(earlier_conflicts(g))
    {
        if (opt.max_colors < 0 || opt.max_colors > kMaxEnumeratedColors)
            throw std::invalid_argument("enumerate colorings: max_colors must be in [0, 64]");
        colors_.assign(g.size(), -1);
    }

    EnumerationStats run()
    {
        const auto& prefix = opt_.prefix;
        if (prefix.size() > g_.size() || !is_canonical(prefix))
            throw std::invalid_argument("enumerate colorings: prefix is not a canonical assignment");
        Color top = -1;
        for (EdgeIndex i = 0; i < prefix.size(); ++i) {
            if (prefix[i] >= opt_.max_colors || (forbidden(i) >> prefix[i] & 1u))
                return stats_; // prefix admits no proper completion within the palette
            colors_[i] = prefix[i];
            top = std::max(top, prefix[i]);
        }
        if (g_.size() == 0) {
            ++stats_.leaves;
            if (!visit_(std::span<const Color>(colors_)))
                stats_.stopped = true;
            return stats_;
        }
        descend(prefix.size(), top);
        return stats_;
    }

private:
    std::uint64_t forbidden(EdgeIndex i) const
    {
        std::uint64_t mask = 0;
        for (auto j : conflicts_[i])
            mask |= std::uint64_t{1} << colors_[j];
        return mask;
    }

    // Returns false to unwind (stop or budget).
    bool descend(EdgeIndex i, Color top)
    {
        if (i == g_.size()) {
            ++stats_.leaves;
            if (!visit_(std::span<const Color>(colors_))) {
                stats_.stopped = true;
                return false;
            }
            return true;
        }
        const auto bad = forbidden(i);
        const Color limit = std::min<Color>(opt_.max_colors - 1, top + 1);
        for (Color c = 0; c <= limit; ++c) {
            if (bad >> c & 1u)
                continue;
            if (stats_.nodes >= opt_.node_budget) {
                stats_.budget_exhausted = true;
                return false;
            }
            ++stats_.nodes;
            colors_[i] = c;
            std::span<const Color> partial(colors_.data(), i + 1);
            if (prune_(partial, i)) {
                ++stats_.pruned;
                continue;
            }
            if (!descend(i + 1, std::max(top, c))) {
                colors_[i] = -1;
                return false;
            }
        }
        colors_[i] = -1;
        return true;
    }

    const Graph& g_;
    const EnumerationOptions& opt_;
    Visitor& visit_;
    Pruner& prune_;
    std::vector<std::vector<EdgeIndex>> conflicts_;
    std::vector<Color> colors_;
    EnumerationStats stats_;
};

} // namespace detail

/// Depth-first enumeration of proper colorings in first-occurrence canonical
/// form (one representative per color-permutation class), in lexicographic
/// order of the color vector.
///
/// visit(span<const Color>) is called on each complete coloring and returns
/// false to stop. prune(span<const Color> partial, EdgeIndex last) is called
/// after every assignment; returning true skips all completions of `partial`.
template <class Visitor, class Pruner = NoPruning>
EnumerationStats for_each_proper_coloring(const Graph& g, const EnumerationOptions& opt, Visitor&& visit,
                                          Pruner&& prune = Pruner{})
{
    detail::ColoringSearch<std::remove_reference_t<Visitor>, std::remove_reference_t<Pruner>> search(g, opt, visit,
                                                                                                     prune);
    return search.run();
}

struct ColoringList {
    std::vector<EdgeColoring> colorings;
    EnumerationStats stats;
};

inline ColoringList enumerate_proper_colorings(const Graph& g, int max_colors,
                                               std::uint64_t budget = std::numeric_limits<std::uint64_t>::max())
{
    ColoringList out;
    EnumerationOptions opt;
    opt.max_colors = max_colors;
    opt.node_budget = budget;
    out.stats = for_each_proper_coloring(g, opt, [&](std::span<const Color> c) {
        out.colorings.push_back(EdgeColoring::unchecked({c.begin(), c.end()}));
        return true;
    });
    return out;
}

/// All canonical proper partial assignments of the first `depth` edges; the
/// subtrees below them partition the full enumeration and can be searched
/// independently.
inline std::vector<std::vector<Color>> canonical_prefixes(const Graph& g, int max_colors, std::size_t depth)
{
    depth = std::min(depth, g.size());
    if (depth == g.size()) {
        std::vector<std::vector<Color>> all;
        for (auto& c : enumerate_proper_colorings(g, max_colors).colorings)
            all.push_back(c.vector());
        return all;
    }
    std::vector<std::vector<Color>> out;
    EnumerationOptions opt;
    opt.max_colors = max_colors;
    auto cut = [&](std::span<const Color> partial, EdgeIndex last) {
        if (last + 1 == depth) {
            out.emplace_back(partial.begin(), partial.end());
            return true;
        }
        return false;
    };
    for_each_proper_coloring(
        g, opt, [](std::span<const Color>) { return true; }, cut);
    return out;
}

// ---------------------------------------------------------------------------
// Constructions

/// Round-robin 1-factorization of K_{2m} by the circle method: vertex 2m-1 is
/// fixed and in round r it meets r, while i is paired with j whenever
/// i + j = 2r (mod 2m-1). Color r is round r. Indexed by make_complete(2m).
inline EdgeColoring one_factorization(int m)
{
    if (m < 1)
        throw std::invalid_argument("one_factorization: m must be at least 1");
    const int n = 2 * m;
    const int mod = n - 1;
    auto g = make_complete(n, static_cast<std::size_t>(n));
    std::vector<Color> colors(g.size(), -1);
    for (int r = 0; r < mod; ++r) {
        colors[*g.edge_index(r, n - 1)] = r;
        for (int i = 1; i < m; ++i) {
            int a = ((r + i) % mod + mod) % mod;
            int b = ((r - i) % mod + mod) % mod;
            colors[*g.edge_index(a, b)] = r;
        }
    }
    return EdgeColoring(g, std::move(colors));
}

/// Proper coloring with at most max_degree + 1 colors (Misra–Gries fan
/// recoloring). Colors are 0..Δ.
inline EdgeColoring greedy_delta_plus_one(const Graph& g)
{
    const int palette = g.max_degree() + 1;
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<Color> color(g.size(), -1);
    // at[v][c] = neighbor joined to v by the edge of color c, or -1
    std::vector<std::vector<Vertex>> at(n, std::vector<Vertex>(static_cast<std::size_t>(palette), -1));

    auto edge_of = [&](Vertex a, Vertex b) { return *g.edge_index(a, b); };
    auto is_free = [&](Vertex v, Color c) { return at[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] < 0; };
    auto set = [&](Vertex a, Vertex b, Color c) {
        auto e = edge_of(a, b);
        if (color[e] >= 0) {
            at[static_cast<std::size_t>(a)][static_cast<std::size_t>(color[e])] = -1;
            at[static_cast<std::size_t>(b)][static_cast<std::size_t>(color[e])] = -1;
        }
        color[e] = c;
        if (c >= 0) {
            at[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = b;
            at[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] = a;
        }
    };
    auto free_color = [&](Vertex v) {
        for (Color c = 0; c < palette; ++c)
            if (is_free(v, c))
                return c;
        throw std::logic_error("greedy_delta_plus_one: no free color");
    };

    for (EdgeIndex e = 0; e < g.size(); ++e) {
        const Vertex x = g.edge(e).u;
        // maximal fan at x starting with the uncolored edge
        std::vector<Vertex> fan{g.edge(e).v};
        std::vector<char> in_fan(n, 0);
        in_fan[static_cast<std::size_t>(fan[0])] = 1;
        for (bool grew = true; grew;) {
            grew = false;
            for (auto w : g.neighbors(x)) {
                if (in_fan[static_cast<std::size_t>(w)])
                    continue;
                Color cw = color[edge_of(x, w)];
                if (cw >= 0 && is_free(fan.back(), cw)) {
                    fan.push_back(w);
                    in_fan[static_cast<std::size_t>(w)] = 1;
                    grew = true;
                }
            }
        }
        const Color c = free_color(x);
        const Color d = free_color(fan.back());

        // invert the cd-path starting at x (it leaves x on its d edge)
        if (!is_free(x, d)) {
            std::vector<std::pair<Vertex, Vertex>> path;
            Vertex cur = x;
            Color want = d;
            while (true) {
                Vertex nxt = at[static_cast<std::size_t>(cur)][static_cast<std::size_t>(want)];
                if (nxt < 0)
                    break;
                path.emplace_back(cur, nxt);
                cur = nxt;
                want = (want == d) ? c : d;
                if (cur == x)
                    break;
            }
            std::vector<Color> old;
            for (auto [a, b] : path) {
                old.push_back(color[edge_of(a, b)]);
                set(a, b, -1);
            }
            for (std::size_t i = 0; i < path.size(); ++i)
                set(path[i].first, path[i].second, old[i] == d ? c : d);
        }

        // first fan vertex with d free; the prefix up to it is still a fan
        std::size_t w = 0;
        while (w < fan.size() && !is_free(fan[w], d))
            ++w;
        if (w == fan.size())
            throw std::logic_error("greedy_delta_plus_one: fan has no vertex free in d");
        for (std::size_t i = 0; i < w; ++i) {
            Color next = color[edge_of(x, fan[i + 1])];
            set(x, fan[i + 1], -1);
            set(x, fan[i], next);
        }
        set(x, fan[w], d);
    }
    return EdgeColoring(g, std::move(color));
}

} // namespace rainbow
