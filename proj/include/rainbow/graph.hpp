#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

using Vertex = int;
using EdgeIndex = std::size_t;

/// Constructors refuse to build graphs with more vertices than this unless a
/// larger cap is passed explicitly.
inline constexpr std::size_t kDefaultVertexCap = 64;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// The edge list is kept in strictly increasing lexicographic order with each
/// pair stored as (min, max); an edge's position in that list is its index and
/// every coloring, embedding and certificate refers to edges by that index.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {})
        : n_(n), edges_(std::move(edges)), labels_(std::move(labels))
    {
        if (n_ < 0)
            throw std::invalid_argument("graph: negative vertex count");
        if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_))
            throw std::invalid_argument("graph: label count does not match vertex count");
        for (auto& e : edges_) {
            if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
                throw std::invalid_argument("graph: edge endpoint out of range");
            if (e.u == e.v)
                throw std::invalid_argument("graph: self-loop");
            if (e.u > e.v)
                std::swap(e.u, e.v);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("graph: duplicate edge");

        adjacency_.assign(static_cast<std::size_t>(n_), {});
        incident_.assign(static_cast<std::size_t>(n_), {});
        for (EdgeIndex i = 0; i < edges_.size(); ++i) {
            auto [u, v] = edges_[i];
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
            incident_[u].push_back(i);
            incident_[v].push_back(i);
        }
        // neighbor lists sorted with incident edge indices kept parallel
        for (std::size_t v = 0; v < adjacency_.size(); ++v) {
            auto& nb = adjacency_[v];
            auto& inc = incident_[v];
            std::vector<std::size_t> perm(nb.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return nb[a] < nb[b]; });
            std::vector<Vertex> nb2;
            std::vector<EdgeIndex> inc2;
            for (auto p : perm) {
                nb2.push_back(nb[p]);
                inc2.push_back(inc[p]);
            }
            nb = std::move(nb2);
            inc = std::move(inc2);
        }
    }

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeIndex i) const { return edges_.at(i); }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }

    /// Edge indices incident to v, parallel to neighbors(v).
    std::span<const EdgeIndex> incident_edges(Vertex v) const { return incident_.at(static_cast<std::size_t>(v)); }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    int max_degree() const noexcept
    {
        int d = 0;
        for (const auto& nb : adjacency_)
            d = std::max(d, static_cast<int>(nb.size()));
        return d;
    }

    std::optional<EdgeIndex> edge_index(Vertex u, Vertex v) const
    {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
            return std::nullopt;
        if (degree(u) > degree(v))
            std::swap(u, v);
        auto nb = neighbors(u);
        auto it = std::lower_bound(nb.begin(), nb.end(), v);
        if (it == nb.end() || *it != v)
            return std::nullopt;
        return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
    }

    bool adjacent(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::string label(Vertex v) const
    {
        if (labels_.empty())
            return std::to_string(v);
        return labels_.at(static_cast<std::size_t>(v));
    }

    /// Degrees sorted non-increasing.
    std::vector<int> degree_sequence() const
    {
        std::vector<int> d;
        d.reserve(adjacency_.size());
        for (const auto& nb : adjacency_)
            d.push_back(static_cast<int>(nb.size()));
        std::sort(d.rbegin(), d.rend());
        return d;
    }

    /// Structural equality; labels are ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::vector<EdgeIndex>> incident_;
};

namespace detail {

inline void check_cap(std::size_t vertices, std::size_t cap, const char* what)
{
    if (vertices > cap)
        throw CapExceeded(std::string(what) + ": " + std::to_string(vertices) + " vertices exceeds cap of " +
                          std::to_string(cap));
}

inline std::string indexed(const std::string& base, long long i) { return base + "_" + std::to_string(i); }

inline std::string indexed(const std::string& base, long long i, long long j)
{
    return base + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

} // namespace detail

// ---------------------------------------------------------------------------
// Structural queries

/// Distances from src by BFS; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, Vertex src)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (auto w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

inline bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

inline bool is_tree(const Graph& g)
{
    return g.order() >= 1 && g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

/// Largest eccentricity; -1 for a disconnected or empty graph.
inline int diameter(const Graph& g)
{
    if (g.order() == 0 || !is_connected(g))
        return -1;
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto d = bfs_distances(g, v);
        best = std::max(best, *std::max_element(d.begin(), d.end()));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Family constructors

/// Path with k edges (k+1 vertices).
inline Graph make_path(int k, std::size_t cap = kDefaultVertexCap)
{
    if (k < 1)
        throw std::invalid_argument("make_path: length must be at least 1");
    detail::check_cap(static_cast<std::size_t>(k) + 1, cap, "make_path");
    std::vector<Edge> e;
    std::vector<std::string> labels;
    for (int i = 0; i <= k; ++i)
        labels.push_back(detail::indexed("v", i));
    for (int i = 0; i < k; ++i)
        e.push_back({i, i + 1});
    return Graph(k + 1, std::move(e), std::move(labels));
}

inline Graph make_cycle(int k, std::size_t cap = kDefaultVertexCap)
{
    if (k < 3)
        throw std::invalid_argument("make_cycle: a cycle needs at least 3 vertices");
    detail::check_cap(static_cast<std::size_t>(k), cap, "make_cycle");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i)
        e.push_back({i, (i + 1) % k});
    return Graph(k, std::move(e));
}

inline Graph make_complete(int n, std::size_t cap = kDefaultVertexCap)
{
    if (n < 1)
        throw std::invalid_argument("make_complete: need at least one vertex");
    detail::check_cap(static_cast<std::size_t>(n), cap, "make_complete");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.push_back({i, j});
    return Graph(n, std::move(e));
}

/// Double star: dominating edge yx, r leaves at y and s leaves at x.
/// Vertex ids: y = 0, x = 1, y_1..y_r = 2..r+1, x_1..x_s = r+2..r+s+1.
inline Graph make_double_star(int r, int s, std::size_t cap = kDefaultVertexCap)
{
    if (r < 0 || s < 0)
        throw std::invalid_argument("make_double_star: negative leaf count");
    detail::check_cap(static_cast<std::size_t>(r + s + 2), cap, "make_double_star");
    std::vector<Edge> e{{0, 1}};
    std::vector<std::string> labels{"y", "x"};
    for (int i = 1; i <= r; ++i) {
        labels.push_back(detail::indexed("y", i));
        e.push_back({0, 1 + i});
    }
    for (int i = 1; i <= s; ++i) {
        labels.push_back(detail::indexed("x", i));
        e.push_back({1, 1 + r + i});
    }
    return Graph(r + s + 2, std::move(e), std::move(labels));
}

/// Spine x_1..x_k (ids 0..k-1) followed by the c_i pendants of each x_i in order.
inline Graph make_caterpillar(std::span<const int> pendants, std::size_t cap = kDefaultVertexCap)
{
    if (pendants.empty())
        throw std::invalid_argument("make_caterpillar: empty spine");
    long long total = static_cast<long long>(pendants.size());
    for (int c : pendants) {
        if (c < 0)
            throw std::invalid_argument("make_caterpillar: negative pendant count");
        total += c;
    }
    detail::check_cap(static_cast<std::size_t>(total), cap, "make_caterpillar");
    const int k = static_cast<int>(pendants.size());
    std::vector<Edge> e;
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i)
        labels.push_back(detail::indexed("x", i + 1));
    for (int i = 0; i + 1 < k; ++i)
        e.push_back({i, i + 1});
    int next = k;
    for (int i = 0; i < k; ++i) {
        for (int j = 1; j <= pendants[static_cast<std::size_t>(i)]; ++j) {
            labels.push_back(detail::indexed("v", i + 1, j));
            e.push_back({i, next++});
        }
    }
    return Graph(next, std::move(e), std::move(labels));
}

inline Graph make_caterpillar(std::initializer_list<int> pendants, std::size_t cap = kDefaultVertexCap)
{
    return make_caterpillar(std::span<const int>(pendants.begin(), pendants.size()), cap);
}

/// Broom: path on k vertices with r leaves at the last spine vertex.
inline Graph make_broom(int k, int r, std::size_t cap = kDefaultVertexCap)
{
    if (k < 1)
        throw std::invalid_argument("make_broom: spine needs at least one vertex");
    if (r < 0)
        throw std::invalid_argument("make_broom: negative leaf count");
    std::vector<int> c(static_cast<std::size_t>(k), 0);
    c.back() = r;
    return make_caterpillar(c, cap);
}

/// Perfect k-ary tree of depth d in breadth-first order. Vertex v_{i,j} is the
/// j-th vertex (1-based) at depth i; children of v_{i,j} are v_{i+1,k(j-1)+1..kj}.
inline Graph make_perfect_kary(int k, int d, std::size_t cap = kDefaultVertexCap)
{
    if (k < 2)
        throw std::invalid_argument("make_perfect_kary: arity must be at least 2");
    if (d < 1)
        throw std::invalid_argument("make_perfect_kary: depth must be at least 1");
    // (k^{d+1}-1)/(k-1) with overflow guard against the cap
    std::size_t total = 0, level = 1;
    for (int i = 0; i <= d; ++i) {
        total += level;
        detail::check_cap(total, cap, "make_perfect_kary");
        if (i < d)
            level *= static_cast<std::size_t>(k);
    }
    std::vector<Edge> e;
    std::vector<std::string> labels{detail::indexed("v", 0, 1)};
    int first_of_level = 0;
    long long width = 1;
    for (int i = 1; i <= d; ++i) {
        int first_child = first_of_level + static_cast<int>(width);
        for (long long j = 0; j < width * k; ++j) {
            labels.push_back(detail::indexed("v", i, j + 1));
            e.push_back({first_of_level + static_cast<int>(j / k), first_child + static_cast<int>(j)});
        }
        first_of_level = first_child;
        width *= k;
    }
    return Graph(static_cast<int>(total), std::move(e), std::move(labels));
}

/// d-regular graph on n vertices (circulant on offsets 1..floor(d/2), plus the
/// antipodal matching when d is odd and n even). When d*n is odd, vertices
/// 0..n-2 get degree d and vertex n-1 gets degree d-1.
inline Graph make_near_regular(int n, int d, std::size_t cap = kDefaultVertexCap)
{
    if (n < 1 || d < 0)
        throw std::invalid_argument("make_near_regular: need n >= 1 and d >= 0");
    if (d >= n)
        throw std::invalid_argument("make_near_regular: degree must be below the vertex count");
    detail::check_cap(static_cast<std::size_t>(n), cap, "make_near_regular");
    std::vector<Edge> e;
    for (int off = 1; off <= d / 2; ++off)
        for (int i = 0; i < n; ++i) {
            int j = (i + off) % n;
            // offset n/2 on even n would list each edge twice
            if (2 * off == n && i >= j)
                continue;
            e.push_back({i, j});
        }
    if (d % 2 == 1) {
        if (n % 2 == 0) {
            for (int i = 0; i < n / 2; ++i)
                e.push_back({i, i + n / 2});
        }
        else {
            // near-perfect matching at cyclic distance (n-1)/2, skipping vertex n-1
            const int half = (n - 1) / 2;
            for (int i = 0; i < half; ++i)
                e.push_back({i, i + half});
        }
    }
    return Graph(n, std::move(e));
}

} // namespace rainbow
