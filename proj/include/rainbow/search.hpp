#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "rainbow/augment.hpp"
#include "rainbow/certificate.hpp"
#include "rainbow/detect.hpp"

namespace rainbow {

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

// ---------------------------------------------------------------------------
// Avoiding colorings

struct AvoidResult {
    std::optional<EdgeColoring> coloring;
    EnumerationStats stats;

    /// No avoider exists (the search ran to completion without one).
    bool absent() const { return !coloring && !stats.budget_exhausted; }
};

inline AvoidResult exists_avoiding_coloring(const Graph& g, const CopyWatcher& watch, std::uint64_t budget = kUnlimited)
{
    AvoidResult out;
    EnumerationOptions opt;
    opt.max_colors = static_cast<int>(std::min<std::size_t>(g.size(), kMaxEnumeratedColors));
    opt.node_budget = budget;
    out.stats = for_each_proper_coloring(
        g, opt,
        [&](std::span<const Color> c) {
            out.coloring = EdgeColoring::unchecked({c.begin(), c.end()});
            return false;
        },
        [&](std::span<const Color> partial, EdgeIndex last) {
            return watch.match_completed_by(partial, last) != CopyWatcher::npos;
        });
    return out;
}

/// A proper coloring of g in which no copy of f has at least k unique edges.
/// Canonical DFS with at most ||g|| colors; a branch is cut as soon as a
/// qualifying copy is fully colored.
inline AvoidResult exists_avoiding_coloring(const Graph& g, const Graph& f, int k, std::uint64_t budget = kUnlimited)
{
    if (k < 0 || k > static_cast<int>(f.size()))
        throw std::invalid_argument("exists_avoiding_coloring: k must lie in [0, ||F||]");
    const CopyWatcher watch(f, g, k, Match::at_least);
    return exists_avoiding_coloring(g, watch, budget);
}

// ---------------------------------------------------------------------------
// Graphs on n labeled vertices up to isomorphism

inline constexpr int kMaxBruteOrder = 7;

/// Bit p of the mask is the p-th pair (i < j) in lexicographic order.
using PairMask = std::uint32_t;

namespace detail {

inline std::vector<std::pair<int, int>> vertex_pairs(int n)
{
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            p.emplace_back(i, j);
    return p;
}

} // namespace detail

inline Graph graph_from_mask(int n, PairMask mask)
{
    std::vector<Edge> e;
    auto pairs = detail::vertex_pairs(n);
    for (std::size_t p = 0; p < pairs.size(); ++p)
        if (mask >> p & 1u)
            e.push_back({pairs[p].first, pairs[p].second});
    return Graph(n, std::move(e));
}

/// Smallest mask over all vertex relabelings.
class Canonicalizer {
public:
    explicit Canonicalizer(int n) : n_(n)
    {
        if (n < 1 || n > kMaxBruteOrder)
            throw std::invalid_argument("canonicalizer: order must be in [1, 7]");
        auto pairs = detail::vertex_pairs(n);
        std::vector<int> index(static_cast<std::size_t>(n * n), -1);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            index[static_cast<std::size_t>(pairs[p].first * n + pairs[p].second)] = static_cast<int>(p);
            index[static_cast<std::size_t>(pairs[p].second * n + pairs[p].first)] = static_cast<int>(p);
        }
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<std::uint8_t> image;
            for (auto [a, b] : pairs)
                image.push_back(static_cast<std::uint8_t>(
                    index[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)] * n +
                                                   perm[static_cast<std::size_t>(b)])]));
            images_.push_back(std::move(image));
        } while (std::next_permutation(perm.begin(), perm.end()));
        pairs_ = pairs.size();
    }

    PairMask canonical(PairMask m) const
    {
        PairMask best = std::numeric_limits<PairMask>::max();
        for (const auto& img : images_) {
            PairMask out = 0;
            for (std::size_t p = 0; p < pairs_; ++p)
                if (m >> p & 1u)
                    out |= PairMask{1} << img[p];
            best = std::min(best, out);
        }
        return best;
    }

    int order() const noexcept { return n_; }
    std::size_t pairs() const noexcept { return pairs_; }

private:
    int n_;
    std::size_t pairs_ = 0;
    std::vector<std::vector<std::uint8_t>> images_;
};

/// Iso-class representatives with m edges from those with m + 1 edges.
inline std::vector<PairMask> classes_one_edge_fewer(const Canonicalizer& canon, const std::vector<PairMask>& above)
{
    std::set<PairMask> raw, out;
    for (auto m : above)
        for (std::size_t p = 0; p < canon.pairs(); ++p)
            if (m >> p & 1u)
                raw.insert(m & ~(PairMask{1} << p));
    for (auto m : raw)
        out.insert(canon.canonical(m));
    return {out.begin(), out.end()};
}

/// Number of isomorphism classes of n-vertex graphs at each edge count.
inline std::vector<std::size_t> iso_class_counts(int n)
{
    Canonicalizer canon(n);
    const std::size_t top = canon.pairs();
    std::vector<std::size_t> counts(top + 1, 0);
    std::vector<PairMask> level{top == 32 ? ~PairMask{0} : (PairMask{1} << top) - 1};
    counts[top] = 1;
    for (std::size_t m = top; m-- > 0;) {
        level = classes_one_edge_fewer(canon, level);
        counts[m] = level.size();
    }
    return counts;
}

// ---------------------------------------------------------------------------
// Exact extremal numbers at small n

struct ExtremalResult {
    /// Exact when lower == upper.
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::optional<Certificate> lower_witness;
    Certificate upper_exhaustion;

    bool exact() const noexcept { return lower == upper; }
};

/// max edges of an n-vertex graph with a proper coloring that has no copy of
/// f with at least k unique edges (k = ||f|| is the rainbow number, k = 0 the
/// classical Turán number). Scans edge counts downward from C(n,2).
inline ExtremalResult brute_extremal(int n, const Graph& f, int k, std::uint64_t budget = kUnlimited)
{
    if (n < 1 || n > kMaxBruteOrder)
        throw std::invalid_argument("brute_extremal: n must be in [1, 7]");
    if (k < 0 || k > static_cast<int>(f.size()))
        throw std::invalid_argument("brute_extremal: k must lie in [0, ||F||]");
    Canonicalizer canon(n);
    const std::size_t top = canon.pairs();
    std::vector<PairMask> level{(PairMask{1} << top) - 1};

    ExtremalResult res;
    std::uint64_t used = 0, classes_checked = 0;
    std::optional<std::size_t> first_undecided;
    const json params{{"n", n}, {"pattern", graph_to_json(f)}, {"k", k}};

    for (std::size_t m = top;; --m) {
        for (auto mask : level) {
            auto g = graph_from_mask(n, mask);
            const std::uint64_t left = used >= budget ? 0 : budget - used;
            auto r = exists_avoiding_coloring(g, f, k, left);
            used += r.stats.nodes;
            ++classes_checked;
            if (r.coloring) {
                res.lower = m;
                auto cert = make_avoider_certificate("brute_extremal", g, *r.coloring, f, k, r.stats.nodes);
                cert.params = params;
                res.lower_witness = std::move(cert);
                break;
            }
            if (r.stats.budget_exhausted && !first_undecided)
                first_undecided = m;
        }
        if (res.lower_witness || m == 0)
            break;
        level = classes_one_edge_fewer(canon, level);
    }
    const bool exhausted = first_undecided.has_value();
    res.upper = exhausted ? std::max(*first_undecided, res.lower) : res.lower;

    Certificate& ex = res.upper_exhaustion;
    ex.kind = CertificateKind::exhaustion;
    ex.operation = "brute_extremal";
    ex.params = params;
    ex.nodes_visited = used;
    ex.exhaustive = !exhausted;
    ex.verdict = exhausted ? Verdict::budget_exhausted : Verdict::pass;
    ex.payload = {{"scheme", "iso-classes-by-min-pair-mask/v1; canonical-first-occurrence/v1"},
                  {"lower", res.lower},
                  {"upper", res.upper},
                  {"classes_checked", classes_checked}};
    return res;
}

// ---------------------------------------------------------------------------
// Universal checks on a fixed host

/// Uniformly random palette color per edge in random edge order, restarting
/// on a dead end. Returns nullopt after max_restarts dead ends.
template <class Rng>
std::optional<std::vector<Color>> random_proper_coloring(const Graph& g, int palette, Rng& rng, int max_restarts = 1000)
{
    std::vector<EdgeIndex> order(g.size());
    std::iota(order.begin(), order.end(), EdgeIndex{0});
    std::vector<Color> c(g.size());
    std::vector<Color> options;
    for (int attempt = 0; attempt < max_restarts; ++attempt) {
        std::shuffle(order.begin(), order.end(), rng);
        std::fill(c.begin(), c.end(), -1);
        bool ok = true;
        for (auto e : order) {
            std::uint64_t bad = 0;
            for (auto v : {g.edge(e).u, g.edge(e).v})
                for (auto j : g.incident_edges(v))
                    if (c[j] >= 0)
                        bad |= std::uint64_t{1} << c[j];
            options.clear();
            for (Color x = 0; x < palette; ++x)
                if (!(bad >> x & 1u))
                    options.push_back(x);
            if (options.empty()) {
                ok = false;
                break;
            }
            c[e] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        }
        if (ok)
            return canonical_relabel(c);
    }
    return std::nullopt;
}

struct UniversalOptions {
    int color_cap = 7;
    std::uint64_t budget = kUnlimited;
    std::uint64_t samples = 1'000'000;
    /// Sampled palettes are drawn from (color_cap, max_sample_palette].
    int max_sample_palette = 14;
    std::uint64_t seed = 0;
    int threads = 1;
    /// Chunks fix the random streams independently of the thread count.
    std::uint64_t sample_chunks = 64;
};

/// Asserts that every non-rainbow proper coloring of host contains a copy of
/// pattern with exactly k unique edges: exhaustively for colorings with at
/// most color_cap colors, by seeded sampling above that. `injected`
/// colorings are checked first (test fixtures).
inline Certificate verify_universal_exactly(const Graph& host, const Graph& pattern, int k,
                                            const UniversalOptions& opt,
                                            const std::vector<std::vector<Color>>& injected = {})
{
    const CopyWatcher watch(pattern, host, k, Match::exactly);
    Certificate cert;
    cert.kind = CertificateKind::k6_universal;
    cert.operation = "verify_universal_exactly";
    cert.params = {{"host", graph_to_json(host)},
                   {"pattern", graph_to_json(pattern)},
                   {"k", k},
                   {"color_cap", opt.color_cap},
                   {"samples", opt.samples},
                   {"max_sample_palette", opt.max_sample_palette},
                   {"seed", opt.seed}};
    auto is_rainbow = [](std::span<const Color> c) { return std::set<Color>(c.begin(), c.end()).size() == c.size(); };
    auto fail = [&](std::span<const Color> c, const char* regime) {
        cert.verdict = Verdict::fail;
        cert.payload["counterexample"] = coloring_to_json(host, EdgeColoring(host, {c.begin(), c.end()}));
        cert.payload["counterexample_regime"] = regime;
        return cert;
    };

    for (const auto& c : injected) {
        if (!is_proper(host, c))
            throw std::invalid_argument("verify_universal_exactly: injected coloring is not proper");
        if (!is_rainbow(c) && watch.match_any(c) == CopyWatcher::npos)
            return fail(c, "injected");
    }

    // exhaustive regime
    const int max_colors = std::min<int>(opt.color_cap, static_cast<int>(std::min<std::size_t>(host.size(), 64)));
    auto task = [&](const std::vector<Color>& prefix, std::uint64_t budget) {
        std::optional<std::vector<Color>> bad;
        for (EdgeIndex i = 0; i < prefix.size(); ++i)
            if (watch.match_completed_by(prefix, i) != CopyWatcher::npos)
                return std::pair{EnumerationStats{}, bad};
        EnumerationOptions eo;
        eo.max_colors = max_colors;
        eo.node_budget = budget;
        eo.prefix = prefix;
        auto st = for_each_proper_coloring(
            host, eo,
            [&](std::span<const Color> c) {
                if (is_rainbow(c))
                    return true;
                bad.emplace(c.begin(), c.end());
                return false;
            },
            [&](std::span<const Color> partial, EdgeIndex last) {
                return last >= prefix.size() && watch.match_completed_by(partial, last) != CopyWatcher::npos;
            });
        return std::pair{st, bad};
    };
    auto [stats, bad] =
        detail::parallel_prefix_search<std::vector<Color>>(host, max_colors, opt.budget, opt.threads, task);
    cert.nodes_visited = stats.nodes;
    cert.payload["exhaustive_regime"] = {{"max_colors", max_colors},
                                         {"nodes", stats.nodes},
                                         {"satisfied_branches", stats.pruned},
                                         {"complete", !stats.budget_exhausted},
                                         {"scheme", "canonical-first-occurrence/v1"}};
    if (bad)
        return fail(*bad, "exhaustive");
    if (stats.budget_exhausted) {
        cert.verdict = Verdict::budget_exhausted;
        cert.exhaustive = false;
        return cert;
    }

    // sampled regime
    std::map<int, std::uint64_t> histogram;
    std::uint64_t generated = 0, failures = 0;
    if (opt.samples > 0 && opt.max_sample_palette > opt.color_cap) {
        const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min(opt.sample_chunks, opt.samples));
        std::vector<std::map<int, std::uint64_t>> hist(chunks);
        std::vector<std::uint64_t> gen(chunks, 0), dead(chunks, 0);
        std::vector<std::optional<std::vector<Color>>> found(chunks);
        std::atomic<std::uint64_t> next{0};
        std::atomic<bool> stop{false};
        auto worker = [&] {
            for (std::uint64_t ch; (ch = next.fetch_add(1)) < chunks;) {
                std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                                  static_cast<std::uint32_t>(ch)};
                std::mt19937_64 rng(seq);
                const std::uint64_t count = opt.samples / chunks + (ch < opt.samples % chunks ? 1 : 0);
                std::uniform_int_distribution<int> pal(opt.color_cap + 1, opt.max_sample_palette);
                for (std::uint64_t s = 0; s < count && !stop.load(std::memory_order_relaxed); ++s) {
                    auto c = random_proper_coloring(host, pal(rng), rng);
                    if (!c) {
                        ++dead[ch];
                        continue;
                    }
                    ++gen[ch];
                    ++hist[ch][*std::max_element(c->begin(), c->end()) + 1];
                    if (!is_rainbow(*c) && watch.match_any(*c) == CopyWatcher::npos) {
                        found[ch] = std::move(c);
                        stop = true;
                        break;
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < std::max(1, opt.threads); ++t)
            pool.emplace_back(worker);
        worker();
        for (auto& t : pool)
            t.join();
        for (std::uint64_t ch = 0; ch < chunks; ++ch) {
            if (found[ch])
                return fail(*found[ch], "sampled");
            generated += gen[ch];
            failures += dead[ch];
            for (auto [q, n] : hist[ch])
                histogram[q] += n;
        }
    }
    json h = json::object();
    for (auto [q, n] : histogram)
        h[std::to_string(q)] = n;
    cert.payload["sampled_regime"] = {{"samples", generated},
                                      {"generation_failures", failures},
                                      {"palette_range", {opt.color_cap + 1, opt.max_sample_palette}},
                                      {"color_count_histogram", h}};
    cert.exhaustive = false; // the sampled regime is never a proof
    cert.verdict = Verdict::pass;
    return cert;
}

// ---------------------------------------------------------------------------
// The paper's complete-graph checks

/// K_6 with the circle-method 1-factorization has no rainbow DS_{2,2}.
inline Certificate verify_k6_rainbow_free()
{
    const auto k6 = make_complete(6);
    const auto ds = make_double_star(2, 2);
    const auto col = one_factorization(3);
    std::uint64_t rainbow = 0;
    const auto copies = for_each_embedding(ds, k6, [&](const Embedding& e) {
        rainbow += unique_count(col.colors(), e) == static_cast<int>(ds.size());
        return true;
    });
    auto cert = make_avoider_certificate("verify_k6_rainbow_free", k6, col, ds, static_cast<int>(ds.size()), copies);
    cert.params = json::object();
    cert.verdict = rainbow == 0 ? Verdict::pass : Verdict::fail;
    cert.payload["embeddings_checked"] = copies;
    cert.payload["rainbow_embeddings"] = rainbow;
    return cert;
}

inline Certificate verify_k6_universal_3unique(const UniversalOptions& opt,
                                               const std::vector<std::vector<Color>>& injected = {})
{
    auto cert = verify_universal_exactly(make_complete(6), make_double_star(2, 2), 3, opt, injected);
    cert.operation = "verify_k6_universal_3unique";
    return cert;
}

inline constexpr int kMaxK2s4 = 4;

/// K_{2s+4} with a 1-factorization has no rainbow DS_{1,2s+1}.
inline Certificate verify_k2s4_construction(int s, int cap = kMaxK2s4)
{
    if (s < 0 || s > cap)
        throw std::invalid_argument("verify_k2s4_construction: s must lie in [0, " + std::to_string(cap) + "]");
    const auto host = make_complete(2 * s + 4);
    const auto ds = make_double_star(1, 2 * s + 1);
    const auto col = one_factorization(s + 2);
    std::uint64_t nodes = 0;
    auto hit = find_k_unique(host, col.colors(), ds, static_cast<int>(ds.size()), Match::at_least, &nodes);
    auto cert = make_avoider_certificate("verify_k2s4_construction", host, col, ds, static_cast<int>(ds.size()), nodes);
    cert.params = {{"s", s}};
    cert.verdict = hit ? Verdict::fail : Verdict::pass;
    if (hit)
        cert.payload["rainbow_copy"] = report_to_json(*hit);
    return cert;
}

// ---------------------------------------------------------------------------
// Re-checking serialized certificates

struct RecheckResult {
    bool ok = false;
    std::string detail;
};

/// Re-validates a certificate from its serialized form. Avoider payloads are
/// re-checked directly; counterexamples are re-checked against the claim they
/// refute; exhaustive PASS results are recomputed from their parameters.
inline RecheckResult recheck_certificate(const Certificate& c, std::uint64_t budget = kUnlimited)
{
    try {
        switch (c.kind) {
        case CertificateKind::avoider: {
            bool valid = revalidate_avoider(c);
            bool expect = c.verdict == Verdict::pass;
            return {valid == expect, valid ? "coloring is proper and avoids the pattern" : "coloring fails to avoid"};
        }
        case CertificateKind::reduction: {
            AugmentedTree t;
            t.original = graph_from_json(c.params.at("original"));
            t.augmented = graph_from_json(c.params.at("augmented"));
            t.embedding = embedding_from_json(c.payload.at("embedding"));
            const int k = c.params.at("k").get<int>();
            if (c.verdict == Verdict::fail) {
                auto col = coloring_from_json(t.augmented, c.payload.at("counterexample"));
                bool avoids = !find_k_unique(t.augmented, col, t.original, k);
                return {avoids, avoids ? "counterexample confirmed" : "counterexample contains a qualifying copy"};
            }
            ReductionOptions ro;
            ro.budget = budget;
            auto again = verify_reduction(t, k, ro);
            return {again.verdict == c.verdict && again.nodes_visited == c.nodes_visited,
                    std::string("recomputed verdict ") + to_string(again.verdict)};
        }
        case CertificateKind::k6_universal: {
            auto host = graph_from_json(c.params.at("host"));
            auto pattern = graph_from_json(c.params.at("pattern"));
            const int k = c.params.at("k").get<int>();
            if (c.verdict == Verdict::fail) {
                auto col = coloring_from_json(host, c.payload.at("counterexample"));
                bool confirmed = !find_k_unique(host, col, pattern, k, Match::exactly);
                return {confirmed, confirmed ? "counterexample confirmed" : "counterexample has an exact copy"};
            }
            // only the exhaustive regime is recomputed
            UniversalOptions uo;
            uo.color_cap = c.params.at("color_cap").get<int>();
            uo.samples = 0;
            uo.budget = budget;
            auto again = verify_universal_exactly(host, pattern, k, uo);
            bool same = again.verdict == c.verdict &&
                        again.payload.at("exhaustive_regime") == c.payload.at("exhaustive_regime");
            return {same, "exhaustive regime recomputed"};
        }
        case CertificateKind::exhaustion: {
            if (c.operation != "brute_extremal")
                return {false, "unknown exhaustion operation"};
            auto f = graph_from_json(c.params.at("pattern"));
            auto res = brute_extremal(c.params.at("n").get<int>(), f, c.params.at("k").get<int>(), budget);
            bool same = res.lower == c.payload.at("lower").get<std::size_t>() &&
                        res.upper == c.payload.at("upper").get<std::size_t>();
            return {same, "recomputed [" + std::to_string(res.lower) + ", " + std::to_string(res.upper) + "]"};
        }
        }
    }
    catch (const std::exception& e) {
        return {false, e.what()};
    }
    return {false, "unknown certificate kind"};
}

} // namespace rainbow
