#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/embedding.hpp"

namespace rainbow {

enum class Match { at_least, exactly };

/// Number of entries whose value occurs exactly once in `embedded`.
inline int unique_in_multiset(std::span<const Color> embedded)
{
    std::unordered_map<Color, int> count;
    for (auto c : embedded)
        ++count[c];
    int unique = 0;
    for (auto c : embedded)
        unique += count[c] == 1;
    return unique;
}

/// Embedded pattern edges whose host color appears exactly once among the
/// embedded edges. Colors elsewhere in the host do not matter.
inline int unique_count(std::span<const Color> host_colors, const Embedding& e)
{
    std::vector<Color> embedded;
    embedded.reserve(e.edge_map.size());
    for (auto he : e.edge_map)
        embedded.push_back(host_colors[he]);
    return unique_in_multiset(embedded);
}

inline int unique_count(const Graph& host, const EdgeColoring& c, const Embedding& e)
{
    if (c.size() != host.size())
        throw std::invalid_argument("unique_count: coloring does not match host");
    return unique_count(c.colors(), e);
}

/// Unique count of a coloring of F itself (identity embedding).
inline int self_unique_count(std::span<const Color> colors) { return unique_in_multiset(colors); }

struct UniquenessReport {
    Embedding embedding;
    int unique_count = 0;
    std::vector<Color> color_multiset; // host colors on pattern edges, in pattern edge order
};

namespace detail {

/// Tracks color multiplicities along the partial embedding and rejects
/// extensions whose best possible final unique count falls below k.
struct UniqueBoundHooks {
    std::span<const Color> colors;
    int k;
    Match mode;
    std::size_t pattern_edges;
    std::vector<int> count; // indexed by color
    int singles = 0;
    std::size_t mapped = 0;
    std::optional<UniquenessReport> found;

    bool push(EdgeIndex, EdgeIndex he)
    {
        int& n = count[static_cast<std::size_t>(colors[he])];
        if (n == 0)
            ++singles;
        else if (n == 1)
            --singles;
        ++n;
        ++mapped;
        // a single may still be spoiled and each remaining edge adds at most one
        return singles + static_cast<int>(pattern_edges - mapped) >= k;
    }

    void pop(EdgeIndex, EdgeIndex he)
    {
        int& n = count[static_cast<std::size_t>(colors[he])];
        --n;
        if (n == 0)
            --singles;
        else if (n == 1)
            ++singles;
        --mapped;
    }

    bool complete(const Embedding& e)
    {
        if (mode == Match::at_least ? singles >= k : singles == k) {
            UniquenessReport rep{e, singles, {}};
            for (auto he : e.edge_map)
                rep.color_multiset.push_back(colors[he]);
            found = std::move(rep);
            return false;
        }
        return true;
    }
};

} // namespace detail

/// First embedding (in for_each_embedding order) whose unique count is at
/// least k (or exactly k), if any.
inline std::optional<UniquenessReport> find_k_unique(const Graph& host, std::span<const Color> colors,
                                                     const Graph& pattern, int k, Match mode = Match::at_least,
                                                     std::uint64_t* nodes = nullptr)
{
    if (colors.size() != host.size())
        throw std::invalid_argument("find_k_unique: coloring does not match host");
    Color top = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
    detail::UniqueBoundHooks hooks{colors, k, mode, pattern.size(), std::vector<int>(static_cast<std::size_t>(top) + 1, 0),
                                   0, 0, std::nullopt};
    detail::EmbeddingSearch<detail::UniqueBoundHooks> search(pattern, host, hooks);
    search.run();
    if (nodes)
        *nodes += search.nodes();
    return hooks.found;
}

inline std::optional<UniquenessReport> find_k_unique(const Graph& host, const EdgeColoring& c, const Graph& pattern,
                                                     int k, Match mode = Match::at_least)
{
    return find_k_unique(host, c.colors(), pattern, k, mode);
}

/// No embedded copy of pattern has all edges distinctly colored.
inline bool is_rainbow_free(const Graph& host, std::span<const Color> colors, const Graph& pattern)
{
    return !find_k_unique(host, colors, pattern, static_cast<int>(pattern.size()), Match::at_least);
}

inline bool is_rainbow_free(const Graph& host, const EdgeColoring& c, const Graph& pattern)
{
    return is_rainbow_free(host, c.colors(), pattern);
}

/// All embeddings of a pattern into a fixed host, bucketed by the largest host
/// edge index they use. During a canonical coloring search (edges colored in
/// index order) the bucket of edge i lists exactly the copies that become
/// fully colored when edge i is assigned, which makes "a k-unique copy is
/// already present" a cheap incremental test.
class CopyWatcher {
public:
    CopyWatcher(const Graph& pattern, const Graph& host, int k, Match mode)
        : k_(k), mode_(mode), pattern_edges_(pattern.size()), by_last_(host.size())
    {
        if (pattern_edges_ > kMaxPatternEdges)
            throw std::invalid_argument("copy watcher: pattern too large");
        for_each_embedding(pattern, host, [&](const Embedding& e) {
            EdgeIndex last = 0;
            for (auto he : e.edge_map)
                last = std::max(last, he);
            if (!e.edge_map.empty())
                by_last_[last].push_back(edges_.size());
            edges_.insert(edges_.end(), e.edge_map.begin(), e.edge_map.end());
            ++copies_;
            return true;
        });
    }

    std::size_t copies() const noexcept { return copies_; }

    /// Offset of a copy completed by edge `last` that matches, or npos.
    std::size_t match_completed_by(std::span<const Color> colors, EdgeIndex last) const
    {
        for (auto off : by_last_[last])
            if (matches(colors, off))
                return off;
        return npos;
    }

    /// Offset of any matching copy among all copies, or npos.
    std::size_t match_any(std::span<const Color> colors) const
    {
        for (std::size_t off = 0; off < edges_.size(); off += pattern_edges_)
            if (matches(colors, off))
                return off;
        return npos;
    }

    std::vector<EdgeIndex> copy_edges(std::size_t off) const
    {
        return {edges_.begin() + static_cast<std::ptrdiff_t>(off),
                edges_.begin() + static_cast<std::ptrdiff_t>(off + pattern_edges_)};
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    static constexpr std::size_t kMaxPatternEdges = 64;

private:
    bool matches(std::span<const Color> colors, std::size_t off) const
    {
        std::array<Color, kMaxPatternEdges> seen;
        for (std::size_t i = 0; i < pattern_edges_; ++i)
            seen[i] = colors[edges_[off + i]];
        // tiny multisets: quadratic count beats hashing
        int unique = 0;
        for (std::size_t i = 0; i < pattern_edges_; ++i) {
            int same = 0;
            for (std::size_t j = 0; j < pattern_edges_; ++j)
                same += seen[j] == seen[i];
            unique += same == 1;
        }
        return mode_ == Match::at_least ? unique >= k_ : unique == k_;
    }

    int k_;
    Match mode_;
    std::size_t pattern_edges_;
    std::size_t copies_ = 0;
    std::vector<EdgeIndex> edges_; // flattened edge maps
    std::vector<std::vector<std::size_t>> by_last_;
};

} // namespace rainbow
