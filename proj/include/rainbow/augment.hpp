#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rainbow/bounds.hpp"
#include "rainbow/certificate.hpp"
#include "rainbow/detect.hpp"

namespace rainbow {

/// A tree F and a larger tree F' with a stored embedding of F into F'.
struct AugmentedTree {
    Graph original;
    Graph augmented;
    Embedding embedding;
    std::vector<ConstructionStep> log;

    std::size_t edge_count() const noexcept { return augmented.size(); }
};

namespace detail {

/// Incremental tree builder that keeps labels and a step log.
class TreeBuilder {
public:
    explicit TreeBuilder(std::size_t cap) : cap_(cap) {}

    Vertex add_vertex(std::string label)
    {
        check_cap(labels_.size() + 1, cap_, "augment");
        labels_.push_back(std::move(label));
        return static_cast<Vertex>(labels_.size() - 1);
    }

    Vertex add_child(Vertex parent, std::string label)
    {
        Vertex v = add_vertex(std::move(label));
        edges_.push_back({parent, v});
        ++pending_;
        return v;
    }

    void step(std::string description)
    {
        log_.push_back({std::move(description), pending_});
        pending_ = 0;
    }

    Graph build() const { return Graph(static_cast<int>(labels_.size()), edges_, labels_); }
    std::vector<ConstructionStep> log() const { return log_; }

private:
    std::size_t cap_;
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<ConstructionStep> log_;
    std::size_t pending_ = 0;
};

inline AugmentedTree finish(Graph original, const TreeBuilder& b, std::vector<Vertex> vertex_map)
{
    AugmentedTree t;
    t.augmented = b.build();
    t.embedding = make_embedding(original, t.augmented, std::move(vertex_map));
    t.original = std::move(original);
    t.log = b.log();
    return t;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Augmentations

/// DS_{r,s} inside DS_{r,s+l}: l extra pendants at x.
inline AugmentedTree augment_double_star(int r, int s, int l, std::size_t cap = kDefaultVertexCap)
{
    if (r < 0 || s < r || l < 0 || l > r)
        throw std::invalid_argument("augment_double_star: need 0 <= l <= r <= s");
    AugmentedTree t;
    t.original = make_double_star(r, s, cap);
    t.augmented = make_double_star(r, s + l, cap);
    std::vector<Vertex> id(static_cast<std::size_t>(t.original.order()));
    for (std::size_t i = 0; i < id.size(); ++i)
        id[i] = static_cast<Vertex>(i);
    t.embedding = make_embedding(t.original, t.augmented, std::move(id));
    t.log.push_back({"double star DS_{" + std::to_string(r) + "," + std::to_string(s) + "}",
                     t.original.size()});
    t.log.push_back({"add " + std::to_string(l) + " pendants at x", static_cast<std::size_t>(l)});
    return t;
}

/// Augmented caterpillar for spine x_1..x_k with c_i pendants at x_i.
///
/// Base: path x_1 x_2 x_3, c_1+1 pendants at x_1 and c_1+c_2 at x_2. Every
/// level-m candidate (x_3 alone at m = 3) sees F_m = (m-2) + sum_{i<m} c_i
/// colors already used besides its incoming edge; it gets F_m + c_m pendants
/// and, below level k, F_m + 1 branches that become the level-(m+1)
/// candidates. A greedy rainbow embedding always finds a free branch and c_m
/// free pendants, so every proper coloring contains a rainbow copy. At k = 3
/// the count is 3c_1 + 2c_2 + c_3 + 4.
inline AugmentedTree augment_caterpillar(std::span<const int> c, std::size_t cap = kDefaultVertexCap)
{
    const int k = static_cast<int>(c.size());
    if (k < 3)
        throw std::invalid_argument("augment_caterpillar: need at least 3 spine vertices");
    if (std::any_of(c.begin(), c.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("augment_caterpillar: negative pendant count");
    auto original = make_caterpillar(c, cap);
    auto ci = [&](int i) { return c[static_cast<std::size_t>(i - 1)]; };

    detail::TreeBuilder b(cap);
    // pendants of the original caterpillar map to the first pendants added at
    // the chosen spine vertices
    std::vector<Vertex> spine_img(static_cast<std::size_t>(k));
    std::vector<std::vector<Vertex>> pendant_img(static_cast<std::size_t>(k));

    Vertex x1 = b.add_vertex(detail::indexed("x", 1));
    Vertex x2 = b.add_child(x1, detail::indexed("x", 2));
    Vertex x3 = b.add_child(x2, detail::indexed("x", 3));
    b.step("spine x_1 x_2 x_3");
    spine_img[0] = x1;
    spine_img[1] = x2;
    spine_img[2] = x3;

    for (int j = 1; j <= ci(1) + 1; ++j) {
        Vertex v = b.add_child(x1, detail::indexed("v", 1, j));
        if (j <= ci(1))
            pendant_img[0].push_back(v);
    }
    b.step(std::to_string(ci(1) + 1) + " pendants at x_1 (c_1 + 1)");
    for (int j = 1; j <= ci(1) + ci(2); ++j) {
        Vertex v = b.add_child(x2, detail::indexed("v", 2, j));
        if (j <= ci(2))
            pendant_img[1].push_back(v);
    }
    b.step(std::to_string(ci(1) + ci(2)) + " pendants at x_2 (c_1 + c_2)");

    std::vector<Vertex> level{x3};
    long long prefix = ci(1) + ci(2); // sum_{i<m} c_i
    for (int m = 3; m <= k; ++m) {
        const long long f = (m - 2) + prefix;
        const long long pendants = f + ci(m);
        std::vector<Vertex> next;
        for (std::size_t p = 0; p < level.size(); ++p) {
            const std::string tag = std::to_string(m) + "." + std::to_string(p + 1);
            for (long long j = 1; j <= pendants; ++j) {
                Vertex v = b.add_child(level[p], "v_{" + tag + "," + std::to_string(j) + "}");
                if (p == 0 && j <= ci(m))
                    pendant_img[static_cast<std::size_t>(m - 1)].push_back(v);
            }
        }
        b.step(std::to_string(pendants) + " pendants at each of " + std::to_string(level.size()) +
               " level-" + std::to_string(m) + " vertices");
        if (m < k) {
            const long long branches = f + 1;
            for (std::size_t p = 0; p < level.size(); ++p)
                for (long long j = 1; j <= branches; ++j)
                    next.push_back(b.add_child(level[p], "x_{" + std::to_string(m + 1) + "." +
                                                             std::to_string(next.size() + 1) + "}"));
            b.step(std::to_string(branches) + " branches at each of " + std::to_string(level.size()) +
                   " level-" + std::to_string(m) + " vertices");
            spine_img[static_cast<std::size_t>(m)] = next.front();
            level = std::move(next);
        }
        prefix += ci(m);
    }

    std::vector<Vertex> vmap;
    for (auto v : spine_img)
        vmap.push_back(v);
    for (const auto& ps : pendant_img)
        for (auto v : ps)
            vmap.push_back(v);
    return detail::finish(std::move(original), b, std::move(vmap));
}

inline AugmentedTree augment_caterpillar(std::initializer_list<int> c, std::size_t cap = kDefaultVertexCap)
{
    return augment_caterpillar(std::span<const int>(c.begin(), c.size()), cap);
}

/// T'(k,d): the root keeps k children and each vertex at depth j-1 gets
/// k^j + (k^j - 1)/(k - 1) - 2 children, for j = 2..d. T(k,d) sits on the
/// first k children everywhere.
inline AugmentedTree augment_kary(int k, int d, std::size_t cap = kDefaultVertexCap)
{
    if (k < 2 || d < 2)
        throw std::invalid_argument("augment_kary: need k >= 2 and d >= 2");
    auto original = make_perfect_kary(k, d, cap);
    detail::TreeBuilder b(cap);
    std::vector<Vertex> vmap{b.add_vertex(detail::indexed("v", 0, 1))};
    // images of the original's current level, in its BFS order
    std::vector<Vertex> orig_level{vmap[0]};
    std::vector<Vertex> level{vmap[0]};
    for (int j = 1; j <= d; ++j) {
        const Integer per = j == 1 ? Integer(k) : kary_leaves_per_parent(k, j);
        const Integer total = per * static_cast<long long>(level.size());
        if (total + static_cast<long long>(b.build().order()) > Integer(cap))
            throw CapExceeded("augment_kary: T'(" + std::to_string(k) + "," + std::to_string(d) +
                              ") exceeds vertex cap of " + std::to_string(cap));
        const auto children = per.convert_to<long long>();
        std::vector<Vertex> next;
        std::vector<std::vector<Vertex>> kids(level.size());
        for (std::size_t p = 0; p < level.size(); ++p)
            for (long long c = 0; c < children; ++c) {
                Vertex v = b.add_child(level[p], detail::indexed("v", j, static_cast<long long>(next.size()) + 1));
                next.push_back(v);
                kids[p].push_back(v);
            }
        b.step(std::to_string(children) + " children at each of " + std::to_string(level.size()) +
               " depth-" + std::to_string(j - 1) + " vertices");
        // original children are the first k of each original parent
        std::vector<Vertex> orig_next;
        for (auto parent : orig_level) {
            auto pos = static_cast<std::size_t>(std::find(level.begin(), level.end(), parent) - level.begin());
            for (int c = 0; c < k; ++c)
                orig_next.push_back(kids[pos][static_cast<std::size_t>(c)]);
        }
        vmap.insert(vmap.end(), orig_next.begin(), orig_next.end());
        orig_level = std::move(orig_next);
        level = std::move(next);
    }
    return detail::finish(std::move(original), b, std::move(vmap));
}

inline AugmentedTree augment_binary(int d, std::size_t cap = kDefaultVertexCap) { return augment_kary(2, d, cap); }

// ---------------------------------------------------------------------------
// Bound reports over constructions

/// (edges - 1)/2 via Erdős–Sós, flagged by the diameter of the augmented tree.
inline BoundReport constructive_report(BoundFamily family, const AugmentedTree& t)
{
    BoundReport r;
    r.family = family;
    r.side = BoundSide::upper;
    r.params["augmented_edges"] = static_cast<long long>(t.edge_count());
    r.coefficient = erdos_sos_coefficient(static_cast<long long>(t.edge_count()));
    r.assumptions = {erdos_sos_assumption(diameter(t.augmented))};
    r.construction_log = t.log;
    return r;
}

struct CaterpillarBounds {
    BoundReport literal;
    BoundReport constructive;
    bool agree = false;
};

inline CaterpillarBounds caterpillar_bounds(std::span<const int> c, std::size_t cap = kDefaultVertexCap)
{
    CaterpillarBounds out;
    auto t = augment_caterpillar(c, cap);
    out.constructive = constructive_report(BoundFamily::caterpillar_upper_constructive, t);
    out.literal.family = BoundFamily::caterpillar_upper_literal;
    out.literal.side = BoundSide::upper;
    out.literal.coefficient = caterpillar_coefficient_literal(c);
    out.literal.assumptions = out.constructive.assumptions;
    out.literal.notes.push_back("empty index range in P_j evaluated as 1");
    for (std::size_t i = 0; i < c.size(); ++i) {
        out.literal.params["c" + std::to_string(i + 1)] = c[i];
        out.constructive.params["c" + std::to_string(i + 1)] = c[i];
    }
    out.agree = out.literal.coefficient == out.constructive.coefficient;
    if (!out.agree) {
        out.literal.notes.push_back("disagrees with constructive coefficient " +
                                    rational_to_string(out.constructive.coefficient));
        out.constructive.notes.push_back("disagrees with literal coefficient " +
                                         rational_to_string(out.literal.coefficient));
    }
    return out;
}

struct BinaryBounds {
    BoundReport literal;
    BoundReport proof_form;
    BoundReport constructive;
};

inline BinaryBounds binary_bounds(int d, std::size_t cap = kDefaultVertexCap)
{
    BinaryBounds out;
    auto t = augment_binary(d, cap);
    out.constructive = constructive_report(BoundFamily::binary_upper_constructive, t);
    out.constructive.params["d"] = d;
    out.literal.family = BoundFamily::binary_upper_literal;
    out.literal.side = BoundSide::upper;
    out.literal.params = {{"d", d}};
    out.literal.coefficient = binary_coefficient_literal(d);
    out.literal.assumptions = out.constructive.assumptions;
    out.proof_form.family = BoundFamily::binary_upper_proof_form;
    out.proof_form.side = BoundSide::upper;
    out.proof_form.params = {{"d", d}};
    out.proof_form.coefficient = binary_coefficient_proof_form(d);
    out.proof_form.assumptions = out.constructive.assumptions;
    for (auto* r : {&out.literal, &out.proof_form, &out.constructive})
        for (auto* o : {&out.literal, &out.proof_form, &out.constructive})
            if (o != r && o->coefficient != r->coefficient)
                r->notes.push_back("differs from " + json(o->family).get<std::string>() + " = " +
                                   rational_to_string(o->coefficient));
    return out;
}

struct KaryBounds {
    BoundReport literal;
    BoundReport constructive;
};

inline KaryBounds kary_bounds(int k, int d, std::size_t cap = kDefaultVertexCap)
{
    KaryBounds out;
    auto t = augment_kary(k, d, cap);
    out.constructive = constructive_report(BoundFamily::kary_upper_constructive, t);
    out.constructive.params["k"] = k;
    out.constructive.params["d"] = d;
    out.literal.family = BoundFamily::kary_upper_literal;
    out.literal.side = BoundSide::upper;
    out.literal.params = {{"k", k}, {"d", d}};
    out.literal.coefficient = kary_coefficient_literal(k, d);
    out.literal.assumptions = out.constructive.assumptions;
    if (out.literal.coefficient != out.constructive.coefficient)
        out.literal.notes.push_back("differs from constructive coefficient " +
                                    rational_to_string(out.constructive.coefficient));
    return out;
}

// ---------------------------------------------------------------------------
// Lower-bound witness for k-unique double stars

struct ColoredHost {
    Graph host;
    EdgeColoring coloring;
};

/// (s+l-1)-regular host on n vertices colored with at most s+l colors. A
/// DS_{r,s} copy then shares at least r+1-l colors between its two sides, so
/// it has at most j+2l-2 unique edges.
inline ColoredHost ds_lower_witness(int r, int s, int l, int n, std::size_t cap = kDefaultVertexCap)
{
    if (r < 0 || s < r || l < 0 || l > r)
        throw std::invalid_argument("ds_lower_witness: need 0 <= l <= r <= s");
    const int d = std::max(0, s + l - 1);
    auto host = make_near_regular(n, d, cap);
    auto col = greedy_delta_plus_one(host);
    return {std::move(host), std::move(col)};
}

// ---------------------------------------------------------------------------
// Parallel canonical search

namespace detail {

/// Searches the subtrees below canonical prefixes in parallel. `task(prefix,
/// budget)` returns (stats, found). The first prefix (in canonical order) that
/// reports a find wins, so the reported witness does not depend on the thread
/// count; later prefixes are skipped once a find is known.
template <class Found, class Task>
std::pair<EnumerationStats, std::optional<Found>> parallel_prefix_search(const Graph& g, int max_colors,
                                                                         std::uint64_t budget, int threads,
                                                                         Task&& task)
{
    // the split does not depend on the thread count, so node totals of
    // complete searches do not either
    const std::size_t depth = std::min<std::size_t>(g.size(), 4);
    auto prefixes = depth == 0 ? std::vector<std::vector<Color>>{{}} : canonical_prefixes(g, max_colors, depth);
    std::vector<EnumerationStats> stats(prefixes.size());
    std::vector<std::optional<Found>> found(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_find{prefixes.size()};
    std::atomic<std::uint64_t> used{0};
    std::atomic<bool> exhausted{false};

    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < prefixes.size();) {
            if (i > first_find.load() || exhausted.load())
                continue;
            const std::uint64_t spent = used.load();
            const std::uint64_t left = spent >= budget ? 0 : budget - spent;
            auto [st, f] = task(prefixes[i], left);
            used.fetch_add(st.nodes);
            if (st.budget_exhausted)
                exhausted = true;
            stats[i] = st;
            if (f) {
                found[i] = std::move(f);
                for (std::size_t cur = first_find.load(); i < cur && !first_find.compare_exchange_weak(cur, i);)
                    ;
            }
        }
    };
    const int n = std::max(1, threads);
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    EnumerationStats total;
    std::optional<Found> winner;
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        total += stats[i];
        if (!winner && found[i])
            winner = std::move(found[i]);
    }
    total.budget_exhausted = exhausted.load() && !winner;
    total.stopped = false;
    return {total, std::move(winner)};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Reduction verification

struct ReductionOptions {
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
    int threads = 1;
};

/// Checks that every proper coloring of the augmented tree contains a copy of
/// the original with at least k unique edges. A branch is closed as soon as a
/// qualifying copy is fully colored; reaching a complete coloring means a
/// counterexample.
inline Certificate verify_reduction(const AugmentedTree& t, int k, const ReductionOptions& opt = {})
{
    if (!is_valid_embedding(t.original, t.augmented, t.embedding))
        throw std::invalid_argument("verify_reduction: stored embedding is invalid");
    if (k < 0 || k > static_cast<int>(t.original.size()))
        throw std::invalid_argument("verify_reduction: k must lie in [0, ||F||]");
    const auto& g = t.augmented;
    const CopyWatcher watch(t.original, g, k, Match::at_least);
    const int max_colors = static_cast<int>(std::min<std::size_t>(g.size(), kMaxEnumeratedColors));

    auto task = [&](const std::vector<Color>& prefix, std::uint64_t budget) {
        std::optional<std::vector<Color>> bad;
        EnumerationOptions eo;
        eo.max_colors = max_colors;
        eo.node_budget = budget;
        eo.prefix = prefix;
        // a prefix may already complete a copy
        for (EdgeIndex i = 0; i < prefix.size(); ++i)
            if (watch.match_completed_by(prefix, i) != CopyWatcher::npos)
                return std::pair{EnumerationStats{}, bad};
        auto st = for_each_proper_coloring(
            g, eo,
            [&](std::span<const Color> c) {
                bad.emplace(c.begin(), c.end());
                return false;
            },
            [&](std::span<const Color> partial, EdgeIndex last) {
                return last >= prefix.size() && watch.match_completed_by(partial, last) != CopyWatcher::npos;
            });
        return std::pair{st, bad};
    };
    auto [stats, bad] = detail::parallel_prefix_search<std::vector<Color>>(g, max_colors, opt.budget, opt.threads, task);

    Certificate cert;
    cert.kind = CertificateKind::reduction;
    cert.operation = "verify_reduction";
    cert.params = {{"original", graph_to_json(t.original)}, {"augmented", graph_to_json(g)}, {"k", k}};
    cert.nodes_visited = stats.nodes;
    cert.exhaustive = !stats.budget_exhausted;
    cert.payload = {{"embedding", embedding_to_json(t.embedding)},
                    {"copies", watch.copies()},
                    {"pruned_satisfied", stats.pruned},
                    {"scheme", "canonical-first-occurrence/v1"}};
    if (bad) {
        cert.verdict = Verdict::fail;
        cert.payload["counterexample"] = coloring_to_json(g, EdgeColoring(g, *bad));
    }
    else if (stats.budget_exhausted)
        cert.verdict = Verdict::budget_exhausted;
    else
        cert.verdict = Verdict::pass;
    return cert;
}

inline json augmented_to_json(const AugmentedTree& t)
{
    json log = json::array();
    for (const auto& s : t.log)
        log.push_back({{"step", s.description}, {"edges_added", s.edges_added}});
    return {{"schema", kSchemaVersion},
            {"original", graph_to_json(t.original)},
            {"augmented", graph_to_json(t.augmented)},
            {"embedding", embedding_to_json(t.embedding)},
            {"construction_log", log},
            {"edge_count", t.edge_count()}};
}

} // namespace rainbow
