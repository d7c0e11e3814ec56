#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/detect.hpp"

namespace rainbow {

/// Default cap on the edge count of graphs whose spectrum is enumerated.
inline constexpr std::size_t kSpectrumEdgeCap = 12;

/// Achievable exactly-k-unique values of a graph's own proper colorings,
/// with one witness coloring per value.
struct KSpectrum {
    std::set<int> values;
    std::map<int, EdgeColoring> witnesses;
    bool exhaustive = true;
    std::uint64_t nodes_visited = 0;

    bool contains(int k) const { return values.count(k) > 0; }
};

/// Exact spectrum by canonical enumeration of proper colorings with at most
/// ||F|| colors.
inline KSpectrum compute_spectrum(const Graph& f, std::uint64_t budget = std::numeric_limits<std::uint64_t>::max(),
                                  std::size_t edge_cap = kSpectrumEdgeCap)
{
    if (f.size() > edge_cap)
        throw CapExceeded("compute_spectrum: " + std::to_string(f.size()) + " edges exceeds cap of " +
                          std::to_string(edge_cap));
    KSpectrum spec;
    EnumerationOptions opt;
    opt.max_colors = static_cast<int>(std::min<std::size_t>(f.size(), kMaxEnumeratedColors));
    opt.node_budget = budget;
    auto stats = for_each_proper_coloring(f, opt, [&](std::span<const Color> c) {
        int u = self_unique_count(c);
        if (spec.values.insert(u).second)
            spec.witnesses.emplace(u, EdgeColoring::unchecked({c.begin(), c.end()}));
        return true;
    });
    spec.exhaustive = stats.exhaustive();
    spec.nodes_visited = stats.nodes;
    return spec;
}

/// Spectrum values of DS_{r,s}: { j + 2l : 0 <= l <= min(r,s) } with
/// j = |s - r| + 1.
inline std::set<int> ds_spectrum_values(int r, int s)
{
    if (r < 0 || s < 0)
        throw std::invalid_argument("ds spectrum: negative leaf count");
    if (r > s)
        std::swap(r, s);
    std::set<int> v;
    const int j = s - r + 1;
    for (int l = 0; l <= r; ++l)
        v.insert(j + 2 * l);
    return v;
}

/// Closed-form DS spectrum with witnesses on make_double_star(r, s): for the
/// value j + 2l the first r - l pendants of the smaller side reuse the colors
/// of the first r - l pendants of the other side and everything else gets a
/// fresh color.
inline KSpectrum ds_spectrum_closed_form(int r, int s)
{
    const auto g = make_double_star(r, s, std::numeric_limits<std::size_t>::max());
    KSpectrum spec;
    spec.values = ds_spectrum_values(r, s);
    const int small = std::min(r, s);
    const int j = std::abs(s - r) + 1;
    // edge index of pendant i (1-based) at y / x in make_double_star numbering
    auto y_edge = [&](int i) { return *g.edge_index(0, 1 + i); };
    auto x_edge = [&](int i) { return *g.edge_index(1, 1 + r + i); };
    for (int l = 0; l <= small; ++l) {
        std::vector<Color> c(g.size(), -1);
        Color next = 0;
        c[*g.edge_index(0, 1)] = next++;
        for (int i = 1; i <= small - l; ++i) {
            Color shared = next++;
            c[y_edge(i)] = shared;
            c[x_edge(i)] = shared;
        }
        for (auto& col : c)
            if (col < 0)
                col = next++;
        spec.witnesses.emplace(j + 2 * l, EdgeColoring(g, std::move(c)));
    }
    return spec;
}

/// Holds when the largest class has at least 3 edges and the smallest at least 2.
inline bool full_spectrum_criterion(const ColorClassProfile& p)
{
    return !p.sizes.empty() && p.largest() >= 3 && p.smallest() >= 2;
}

/// {0, ..., ||F||-2} ∪ {||F||}
inline std::set<int> full_spectrum_values(std::size_t edges)
{
    std::set<int> v;
    for (std::size_t i = 0; i + 2 <= edges; ++i)
        v.insert(static_cast<int>(i));
    v.insert(static_cast<int>(edges));
    return v;
}

/// Color-switching construction of one coloring per value of the full
/// spectrum, starting from a proper coloring whose profile meets the
/// criterion.
///
/// Classes L_1..L_r are ordered by size (ties by color id) and edges within a
/// class by index; e_{i,j} is the j-th edge of L_i. The base coloring gives
/// every edge its own color with e_{i,1} colored i. Emission order:
///   1. base (||F|| unique);
///   2. e_{1,2}, ..., e_{1,l_1} recolored to 1, one at a time;
///   3. for each i >= 2: e_{1,l_1} back to its base color and e_{i,2} to i
///      simultaneously, then e_{1,l_1} back to 1, then e_{i,3..l_i} to i.
/// Returned in emission order, which is strictly decreasing in unique count.
inline std::vector<EdgeColoring> witness_family(const Graph& f, const EdgeColoring& start)
{
    if (start.size() != f.size() || !is_proper(f, start.colors()))
        throw std::invalid_argument("witness_family: starting coloring is not a proper coloring of f");
    if (!full_spectrum_criterion(color_class_profile(start)))
        throw std::invalid_argument("witness_family: color class profile does not meet the criterion");

    auto by_color = color_classes(start.colors());
    std::vector<std::vector<EdgeIndex>> classes;
    for (auto& [col, edges] : by_color)
        classes.push_back(std::move(edges));
    std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });

    const std::size_t r = classes.size();
    std::vector<Color> base(f.size(), -1);
    for (std::size_t i = 0; i < r; ++i)
        base[classes[i][0]] = static_cast<Color>(i);
    Color fresh = static_cast<Color>(r);
    for (auto& c : base)
        if (c < 0)
            c = fresh++;

    std::vector<EdgeColoring> out;
    auto emit = [&](const std::vector<Color>& c) { out.push_back(EdgeColoring(f, c)); };

    std::vector<Color> cur = base;
    emit(cur);
    const auto& first = classes[0];
    const EdgeIndex pivot = first.back(); // e_{1,l_1}
    for (std::size_t j = 1; j < first.size(); ++j) {
        cur[first[j]] = 0;
        emit(cur);
    }
    for (std::size_t i = 1; i < r; ++i) {
        const auto& cls = classes[i];
        cur[pivot] = base[pivot];
        cur[cls[1]] = static_cast<Color>(i);
        emit(cur);
        cur[pivot] = 0;
        emit(cur);
        for (std::size_t j = 2; j < cls.size(); ++j) {
            cur[cls[j]] = static_cast<Color>(i);
            emit(cur);
        }
    }
    return out;
}

/// Lexicographically least canonical proper coloring of f whose profile meets
/// the full-spectrum criterion, if one exists within the budget.
inline std::optional<EdgeColoring> first_qualifying_coloring(
    const Graph& f, std::uint64_t budget = std::numeric_limits<std::uint64_t>::max())
{
    std::optional<EdgeColoring> found;
    EnumerationOptions opt;
    opt.max_colors = static_cast<int>(std::min<std::size_t>(f.size(), kMaxEnumeratedColors));
    opt.node_budget = budget;
    for_each_proper_coloring(f, opt, [&](std::span<const Color> c) {
        auto col = EdgeColoring::unchecked({c.begin(), c.end()});
        if (full_spectrum_criterion(color_class_profile(col))) {
            found = std::move(col);
            return false;
        }
        return true;
    });
    return found;
}

/// Smallest k' >= k in the spectrum.
inline int round_up_k(const KSpectrum& spec, std::size_t edges, int k)
{
    if (k < 0 || k > static_cast<int>(edges))
        throw std::invalid_argument("round_up_k: k must lie in [0, ||F||]");
    auto it = spec.values.lower_bound(k);
    if (it == spec.values.end())
        throw std::logic_error("round_up_k: spectrum is missing ||F||");
    return *it;
}

inline int round_up_k(const Graph& f, int k) { return round_up_k(compute_spectrum(f), f.size(), k); }

} // namespace rainbow
