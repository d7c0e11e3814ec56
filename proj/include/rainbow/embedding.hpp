#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Injective vertex map of a pattern into a host, with the induced edge map
/// (pattern edge index -> host edge index).
struct Embedding {
    std::vector<Vertex> vertex_map;
    std::vector<EdgeIndex> edge_map;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Builds the embedding for a given vertex map, or throws if the map is not
/// injective or misses a host edge.
inline Embedding make_embedding(const Graph& pattern, const Graph& host, std::vector<Vertex> vertex_map)
{
    if (vertex_map.size() != static_cast<std::size_t>(pattern.order()))
        throw std::invalid_argument("embedding: vertex map has wrong length");
    std::vector<char> used(static_cast<std::size_t>(host.order()), 0);
    for (auto v : vertex_map) {
        if (v < 0 || v >= host.order())
            throw std::invalid_argument("embedding: host vertex out of range");
        if (used[static_cast<std::size_t>(v)]++)
            throw std::invalid_argument("embedding: vertex map is not injective");
    }
    Embedding emb{std::move(vertex_map), {}};
    emb.edge_map.reserve(pattern.size());
    for (const auto& [u, v] : pattern.edges()) {
        auto idx = host.edge_index(emb.vertex_map[static_cast<std::size_t>(u)],
                                   emb.vertex_map[static_cast<std::size_t>(v)]);
        if (!idx)
            throw std::invalid_argument("embedding: pattern edge has no host image");
        emb.edge_map.push_back(*idx);
    }
    return emb;
}

inline bool is_valid_embedding(const Graph& pattern, const Graph& host, const Embedding& emb)
{
    try {
        return make_embedding(pattern, host, emb.vertex_map).edge_map == emb.edge_map;
    }
    catch (const std::invalid_argument&) {
        return false;
    }
}

namespace detail {

/// Pattern vertex order for backtracking: depth-first from the highest-degree
/// vertex, visiting neighbors by decreasing degree (ties by id). For every
/// vertex after the first in its component, `anchor` is an earlier-placed
/// neighbor and `back` lists all earlier-placed neighbors with the connecting
/// pattern edge.
struct SearchPlan {
    struct Step {
        Vertex vertex;
        Vertex anchor; // -1 if the vertex starts a new component
        std::vector<std::pair<Vertex, EdgeIndex>> back;
    };
    std::vector<Step> steps;
};

inline SearchPlan make_search_plan(const Graph& pattern)
{
    const auto n = static_cast<std::size_t>(pattern.order());
    auto by_degree = [&](Vertex a, Vertex b) {
        int da = pattern.degree(a), db = pattern.degree(b);
        return da != db ? da > db : a < b;
    };
    std::vector<Vertex> order;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> roots(n);
    std::iota(roots.begin(), roots.end(), 0);
    std::sort(roots.begin(), roots.end(), by_degree);
    for (auto root : roots) {
        if (seen[static_cast<std::size_t>(root)])
            continue;
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            if (seen[static_cast<std::size_t>(v)])
                continue;
            seen[static_cast<std::size_t>(v)] = 1;
            order.push_back(v);
            std::vector<Vertex> nb(pattern.neighbors(v).begin(), pattern.neighbors(v).end());
            std::sort(nb.begin(), nb.end(), by_degree);
            // reversed so the preferred neighbor is popped first
            for (auto it = nb.rbegin(); it != nb.rend(); ++it)
                if (!seen[static_cast<std::size_t>(*it)])
                    stack.push_back(*it);
        }
    }

    std::vector<int> position(n, -1);
    SearchPlan plan;
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto v = order[i];
        SearchPlan::Step step{v, -1, {}};
        auto nb = pattern.neighbors(v);
        auto inc = pattern.incident_edges(v);
        int best = -1;
        for (std::size_t t = 0; t < nb.size(); ++t) {
            int p = position[static_cast<std::size_t>(nb[t])];
            if (p < 0)
                continue;
            step.back.emplace_back(nb[t], inc[t]);
            if (best < 0 || p < best) {
                best = p;
                step.anchor = nb[t];
            }
        }
        position[static_cast<std::size_t>(v)] = static_cast<int>(i);
        plan.steps.push_back(std::move(step));
    }
    return plan;
}

/// Backtracking embedding search. Hooks must provide
///   bool push(EdgeIndex pattern_edge, EdgeIndex host_edge)  -- false rejects the extension
///   void pop(EdgeIndex pattern_edge, EdgeIndex host_edge)  -- undoes every push, rejected ones too
///   bool complete(const Embedding&)                        -- false stops the search
/// Returns false if the search was stopped by a hook.
template <class Hooks>
class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& pattern, const Graph& host, Hooks& hooks)
        : pattern_(pattern), host_(host), hooks_(hooks), plan_(make_search_plan(pattern))
    {
        emb_.vertex_map.assign(static_cast<std::size_t>(pattern.order()), -1);
        emb_.edge_map.assign(pattern.size(), 0);
        used_.assign(static_cast<std::size_t>(host.order()), 0);
    }

    bool run()
    {
        if (pattern_.order() > host_.order())
            return true;
        return extend(0);
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    bool extend(std::size_t depth)
    {
        if (depth == plan_.steps.size())
            return hooks_.complete(emb_);
        const auto& step = plan_.steps[depth];
        const int need = pattern_.degree(step.vertex);
        auto try_host = [&](Vertex h) -> bool {
            if (used_[static_cast<std::size_t>(h)] || host_.degree(h) < need)
                return true;
            ++nodes_;
            std::size_t pushed = 0;
            bool ok = true;
            for (const auto& [pv, pe] : step.back) {
                auto he = host_.edge_index(h, emb_.vertex_map[static_cast<std::size_t>(pv)]);
                if (!he) {
                    ok = false;
                    break;
                }
                emb_.edge_map[pe] = *he;
                ++pushed;
                if (!hooks_.push(pe, *he)) {
                    ok = false;
                    break;
                }
            }
            bool keep_going = true;
            if (ok) {
                emb_.vertex_map[static_cast<std::size_t>(step.vertex)] = h;
                used_[static_cast<std::size_t>(h)] = 1;
                keep_going = extend(depth + 1);
                used_[static_cast<std::size_t>(h)] = 0;
                emb_.vertex_map[static_cast<std::size_t>(step.vertex)] = -1;
            }
            while (pushed > 0) {
                --pushed;
                auto pe = step.back[pushed].second;
                hooks_.pop(pe, emb_.edge_map[pe]);
            }
            return keep_going;
        };
        if (step.anchor >= 0) {
            for (auto h : host_.neighbors(emb_.vertex_map[static_cast<std::size_t>(step.anchor)]))
                if (!try_host(h))
                    return false;
        }
        else {
            for (Vertex h = 0; h < host_.order(); ++h)
                if (!try_host(h))
                    return false;
        }
        return true;
    }

    const Graph& pattern_;
    const Graph& host_;
    Hooks& hooks_;
    SearchPlan plan_;
    Embedding emb_;
    std::vector<char> used_;
    std::uint64_t nodes_ = 0;
};

struct PlainHooks {
    bool push(EdgeIndex, EdgeIndex) { return true; }
    void pop(EdgeIndex, EdgeIndex) {}
};

} // namespace detail

/// Calls visit(const Embedding&) for every labeled embedding of pattern into
/// host, in a deterministic order; visit returns false to stop early.
/// Returns the number of embeddings visited.
template <class Visitor>
std::uint64_t for_each_embedding(const Graph& pattern, const Graph& host, Visitor&& visit)
{
    struct Hooks : detail::PlainHooks {
        Visitor& visit;
        std::uint64_t count = 0;
        explicit Hooks(Visitor& v) : visit(v) {}
        bool complete(const Embedding& e)
        {
            ++count;
            return static_cast<bool>(visit(e));
        }
    } hooks{visit};
    detail::EmbeddingSearch<Hooks> search(pattern, host, hooks);
    search.run();
    return hooks.count;
}

inline std::vector<Embedding> enumerate_embeddings(const Graph& pattern, const Graph& host)
{
    std::vector<Embedding> out;
    for_each_embedding(pattern, host, [&](const Embedding& e) {
        out.push_back(e);
        return true;
    });
    return out;
}

inline bool contains_subgraph(const Graph& pattern, const Graph& host)
{
    bool found = false;
    for_each_embedding(pattern, host, [&](const Embedding&) {
        found = true;
        return false;
    });
    return found;
}

} // namespace rainbow
