// rtk: command-line front end for the rainbow Turán toolkit.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rainbow/rainbow.hpp"

using namespace rainbow;

namespace {

enum Exit { ok = 0, verify_fail = 1, usage = 2, budget = 3 };

struct RunConfig {
    std::string command;
    std::uint64_t budget = kUnlimited;
    int color_cap = 7;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    std::string cache_dir;
    std::string format = "json";
    int threads = 1;
    std::string graph_file;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

json budget_json(const RunConfig& cfg) { return cfg.budget == kUnlimited ? json(nullptr) : json(cfg.budget); }

std::string set_to_string(const std::set<int>& s)
{
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it)
        out += (it == s.begin() ? "" : ",") + std::to_string(*it);
    return out + "}";
}

std::string coefficient_n(const Rational& q)
{
    auto den = boost::multiprecision::denominator(q);
    auto num = boost::multiprecision::numerator(q);
    if (den == 1)
        return num.str() + "n";
    return num.str() + "n/" + den.str();
}

void emit(const RunConfig& cfg, json result, const std::string& table)
{
    if (cfg.format == "table") {
        std::cout << table;
        if (!table.empty() && table.back() != '\n')
            std::cout << '\n';
        std::cout << "seed: " << cfg.seed << '\n';
        return;
    }
    json out{{"schema", kSchemaVersion}, {"command", cfg.command}, {"seed", cfg.seed}, {"result", std::move(result)}};
    std::cout << out.dump(2) << '\n';
}

Graph load_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open graph file " + path);
    auto j = json::parse(in);
    if (j.contains("result"))
        j = j.at("result");
    return graph_from_json(j.contains("graph") ? j.at("graph") : j);
}

Graph target_graph(const RunConfig& cfg, const std::vector<std::string>& spec)
{
    if (!cfg.graph_file.empty()) {
        if (!spec.empty())
            throw UsageError("give either a family spec or --graph-file, not both");
        return load_graph_file(cfg.graph_file);
    }
    if (spec.empty())
        throw UsageError("missing family spec");
    return parse_family_spec(spec).build();
}

CertificateCache cache_for(const RunConfig& cfg)
{
    return CertificateCache(cfg.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cfg.cache_dir));
}

int exit_for(Verdict v)
{
    switch (v) {
    case Verdict::pass: return ok;
    case Verdict::fail: return verify_fail;
    case Verdict::budget_exhausted: return budget;
    }
    return usage;
}

/// Loads a cached certificate for (operation, params) or computes and stores it.
template <class Compute>
Certificate cached(const RunConfig& cfg, const std::string& operation, const json& params, Compute&& compute)
{
    auto cache = cache_for(cfg);
    if (auto hit = cache.load(operation, params))
        return *hit;
    Certificate c = compute();
    c.operation = operation;
    cache.store(c, params);
    return c;
}

std::string certificate_table(const Certificate& c)
{
    std::ostringstream t;
    t << c.operation << ": " << to_string(c.verdict) << "\n";
    t << "  kind: " << json(c.kind).get<std::string>() << ", nodes: " << c.nodes_visited
      << ", exhaustive: " << (c.exhaustive ? "yes" : "no") << "\n";
    if (c.payload.contains("counterexample"))
        t << "  counterexample: " << c.payload["counterexample"]["colors"].dump() << "\n";
    if (c.payload.contains("sampled_regime"))
        t << "  sampled: " << c.payload["sampled_regime"]["samples"] << " colorings\n";
    return t.str();
}

// ---------------------------------------------------------------------------

int cmd_spectrum(const RunConfig& cfg, const std::vector<std::string>& spec_tokens, bool closed_form)
{
    if (closed_form) {
        auto spec = parse_family_spec(spec_tokens);
        if (spec.family != Family::double_star)
            throw UsageError("--closed-form applies to DS r s only");
        auto g = spec.build();
        auto s = ds_spectrum_closed_form(spec.params[0], spec.params[1]);
        json w = json::object();
        for (const auto& [k, c] : s.witnesses)
            w[std::to_string(k)] = c.vector();
        emit(cfg, {{"graph", graph_to_json(g)}, {"values", s.values}, {"witnesses", w}, {"closed_form", true}},
             "Spec(" + spec.to_string() + ") = " + set_to_string(s.values) + " (closed form)\n");
        return ok;
    }
    auto g = target_graph(cfg, spec_tokens);
    auto s = compute_spectrum(g, cfg.budget);
    json w = json::object();
    std::ostringstream t;
    t << "Spec = " << set_to_string(s.values) << (s.exhaustive ? "" : " (partial: budget exhausted)") << "\n";
    for (const auto& [k, c] : s.witnesses) {
        w[std::to_string(k)] = c.vector();
        t << "  " << k << "-unique: " << json(c.vector()).dump() << "\n";
    }
    emit(cfg,
         {{"graph", graph_to_json(g)},
          {"values", s.values},
          {"witnesses", w},
          {"exhaustive", s.exhaustive},
          {"nodes_visited", s.nodes_visited},
          {"budget", budget_json(cfg)}},
         t.str());
    return s.exhaustive ? ok : budget;
}

int cmd_bounds(const RunConfig& cfg, const std::vector<std::string>& tokens, bool rainbow_only, std::optional<int> l,
               std::size_t cap)
{
    auto spec = parse_family_spec(tokens);
    std::vector<BoundReport> reports;
    switch (spec.family) {
    case Family::double_star: {
        const int r = spec.params[0], s = spec.params[1];
        if (rainbow_only) {
            auto b = (r == 2 && s == 2) ? ds22_bounds() : ds_rainbow_bounds(r, s);
            reports = {b.lower, b.upper};
            if (r == 1 && s % 2 == 1)
                reports.push_back(ds_1_odd_exact((s - 1) / 2));
        }
        else {
            for (int ll = 0; ll <= r; ++ll) {
                if (l && *l != ll)
                    continue;
                auto b = ds_k_unique_bounds(r, s, ll);
                reports.push_back(b.lower);
                reports.push_back(b.upper);
            }
            if (reports.empty())
                throw UsageError("--l must lie in [0, r]");
        }
        break;
    }
    case Family::caterpillar: {
        auto b = caterpillar_bounds(spec.params, cap);
        reports = {b.literal, b.constructive};
        break;
    }
    case Family::kary: {
        const int k = spec.params[0], d = spec.params[1];
        auto b = kary_bounds(k, d, cap);
        reports = {b.literal, b.constructive};
        if (k == 2) {
            auto bin = binary_bounds(d, cap);
            reports.insert(reports.end(), {bin.literal, bin.proof_form, bin.constructive});
        }
        break;
    }
    default: {
        auto g = spec.build(cap);
        if (!is_tree(g))
            throw UsageError("bounds are available for trees only");
        reports = {erdos_sos_report(g)};
    }
    }
    json arr = json::array();
    std::ostringstream t;
    for (const auto& r : reports) {
        arr.push_back(bound_to_json(r));
        t << json(r.family).get<std::string>() << "  " << json(r.side).get<std::string>() << "  "
          << coefficient_n(r.coefficient) << (r.error_term.empty() ? "" : " + " + r.error_term);
        if (!r.assumptions.empty()) {
            t << "  [assumes";
            for (auto a : r.assumptions)
                t << " " << json(a).get<std::string>();
            t << "]";
        }
        for (const auto& n : r.notes)
            t << "\n    note: " << n;
        t << "\n";
    }
    emit(cfg, {{"family", spec.to_string()}, {"reports", arr}}, t.str());
    return ok;
}

AugmentedTree augment_for(const FamilySpec& spec, std::optional<int> l, std::size_t cap)
{
    switch (spec.family) {
    case Family::double_star:
        if (!l)
            throw UsageError("double-star augmentation needs --l");
        return augment_double_star(spec.params[0], spec.params[1], *l, cap);
    case Family::caterpillar: return augment_caterpillar(spec.params, cap);
    case Family::kary: return augment_kary(spec.params[0], spec.params[1], cap);
    default: throw UsageError("augmentation is defined for DS, CAT and T families");
    }
}

int cmd_construct(const RunConfig& cfg, const std::vector<std::string>& tokens, bool augment, std::optional<int> l,
                  std::size_t cap)
{
    if (!augment) {
        auto g = target_graph(cfg, tokens);
        std::ostringstream t;
        t << g.order() << " vertices, " << g.size() << " edges\n";
        for (const auto& [u, v] : g.edges())
            t << "  " << g.label(u) << " - " << g.label(v) << "\n";
        emit(cfg, {{"graph", graph_to_json(g)}, {"graph_hash", graph_hash(g)}}, t.str());
        return ok;
    }
    auto t = augment_for(parse_family_spec(tokens), l, cap);
    std::ostringstream tab;
    tab << "augmented: " << t.augmented.order() << " vertices, " << t.edge_count() << " edges\n";
    for (const auto& s : t.log)
        tab << "  +" << s.edges_added << "  " << s.description << "\n";
    emit(cfg, augmented_to_json(t), tab.str());
    return ok;
}

int finish_certificate(const RunConfig& cfg, const Certificate& c)
{
    emit(cfg, certificate_to_json(c), certificate_table(c));
    return exit_for(c.verdict);
}

int cmd_verify(const RunConfig& cfg, const std::string& check, const std::vector<std::string>& tokens, int s,
               std::optional<int> l, std::optional<int> k, const std::string& recheck_file, std::size_t cap)
{
    if (!recheck_file.empty()) {
        std::ifstream in(recheck_file);
        if (!in)
            throw UsageError("cannot open " + recheck_file);
        json j = json::parse(in);
        if (j.contains("result"))
            j = j.at("result");
        RecheckResult r;
        if (j.contains("kind"))
            r = recheck_certificate(certificate_from_json(j), cfg.budget);
        else if (j.contains("augmented") && j.contains("embedding")) {
            auto orig = graph_from_json(j.at("original"));
            auto aug = graph_from_json(j.at("augmented"));
            bool valid = is_valid_embedding(orig, aug, embedding_from_json(j.at("embedding")));
            r = {valid, valid ? "embedding re-validated" : "embedding is invalid"};
        }
        else if (j.contains("graph") && j.contains("witnesses")) {
            auto g = graph_from_json(j.at("graph"));
            r = {true, "witnesses re-validated"};
            for (const auto& [key, colors] : j.at("witnesses").items()) {
                EdgeColoring c(g, colors.get<std::vector<Color>>());
                if (self_unique_count(c.colors()) != std::stoi(key))
                    r = {false, "witness for " + key + " has the wrong unique count"};
            }
        }
        else if (j.contains("graph")) {
            graph_from_json(j.at("graph"));
            r = {true, "graph re-validated"};
        }
        else
            throw UsageError("unrecognized document in " + recheck_file);
        emit(cfg, {{"file", recheck_file}, {"valid", r.ok}, {"detail", r.detail}},
             std::string(r.ok ? "VALID" : "INVALID") + ": " + r.detail + "\n");
        return r.ok ? ok : verify_fail;
    }

    if (check == "k6-rainbow-free")
        return finish_certificate(cfg, cached(cfg, "verify_k6_rainbow_free", json::object(),
                                              [] { return verify_k6_rainbow_free(); }));
    if (check == "k6-universal-3unique") {
        UniversalOptions o;
        o.color_cap = cfg.color_cap;
        o.samples = cfg.samples;
        o.seed = cfg.seed;
        o.threads = cfg.threads;
        o.budget = cfg.budget;
        json params{{"color_cap", o.color_cap}, {"samples", o.samples}, {"seed", o.seed},
                    {"max_sample_palette", o.max_sample_palette}, {"budget", budget_json(cfg)}};
        return finish_certificate(cfg, cached(cfg, "verify_k6_universal_3unique", params,
                                              [&] { return verify_k6_universal_3unique(o); }));
    }
    if (check == "k2s4") {
        if (s < 0)
            throw UsageError("k2s4 needs --s");
        return finish_certificate(cfg, cached(cfg, "verify_k2s4_construction", {{"s", s}},
                                              [&] { return verify_k2s4_construction(s); }));
    }
    if (check == "reduction") {
        auto spec = parse_family_spec(tokens);
        auto t = augment_for(spec, l, cap);
        int kk = k ? *k : static_cast<int>(t.original.size());
        if (!k && spec.family == Family::double_star)
            kk = spec.params[1] - spec.params[0] + 1 + 2 * *l;
        ReductionOptions ro;
        ro.budget = cfg.budget;
        ro.threads = cfg.threads;
        json params{{"original", graph_to_json(t.original)},
                    {"augmented", graph_to_json(t.augmented)},
                    {"k", kk},
                    {"budget", budget_json(cfg)}};
        auto c = cached(cfg, "verify_reduction", params, [&] { return verify_reduction(t, kk, ro); });
        return finish_certificate(cfg, c);
    }
    throw UsageError("unknown check '" + check + "' (k6-rainbow-free, k6-universal-3unique, k2s4, reduction)");
}

int cmd_search(const RunConfig& cfg, int n, const std::vector<std::string>& pattern, std::optional<int> k,
               bool rainbow_flag)
{
    auto f = target_graph(cfg, pattern);
    if (rainbow_flag == k.has_value())
        throw UsageError("give exactly one of --k or --rainbow");
    const int kk = rainbow_flag ? static_cast<int>(f.size()) : *k;
    json params{{"n", n}, {"pattern", graph_to_json(f)}, {"k", kk}, {"budget", budget_json(cfg)}};
    auto cache = cache_for(cfg);
    auto exhaustion = cache.load("brute_extremal", params);
    std::optional<Certificate> witness = cache.load("brute_extremal_witness", params);
    if (!exhaustion) {
        auto res = brute_extremal(n, f, kk, cfg.budget);
        exhaustion = res.upper_exhaustion;
        cache.store(*exhaustion, params);
        witness = res.lower_witness;
        if (witness) {
            witness->operation = "brute_extremal_witness";
            cache.store(*witness, params);
        }
    }
    ExtremalResult res;
    res.lower = exhaustion->payload.at("lower").get<std::size_t>();
    res.upper = exhaustion->payload.at("upper").get<std::size_t>();
    res.upper_exhaustion = *exhaustion;
    res.lower_witness = witness;
    json out{{"n", n}, {"pattern", graph_to_json(f)}, {"k", kk}, {"lower", res.lower}, {"upper", res.upper},
             {"exact", res.exact()}, {"exhaustion", certificate_to_json(res.upper_exhaustion)}};
    if (res.lower_witness)
        out["witness"] = certificate_to_json(*res.lower_witness);
    if (res.exact())
        out["value"] = res.lower;
    std::ostringstream t;
    t << "ex_" << kk << "(" << n << ", F) = ";
    if (res.exact())
        t << res.lower << "\n";
    else
        t << "[" << res.lower << ", " << res.upper << "] (budget exhausted)\n";
    emit(cfg, out, t.str());
    return res.exact() ? ok : budget;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rtk: rainbow and k-unique Turán numbers, spectra and constructions"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    std::uint64_t budget_opt = 0;
    std::size_t cap = kDefaultVertexCap;
    app.add_option("--budget", budget_opt, "node limit for exhaustive searches")->check(CLI::PositiveNumber);
    app.add_option("--color-cap", cfg.color_cap, "colors covered exhaustively by the K6 universal check")
        ->check(CLI::Range(1, 15));
    app.add_option("--samples", cfg.samples, "random colorings above the color cap");
    app.add_option("--seed", cfg.seed, "seed for sampled checks");
    app.add_option("--cache-dir", cfg.cache_dir, "certificate cache (default $RT_CACHE_DIR or .rainbow-cache)");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 256));
    app.add_option("--graph-file", cfg.graph_file, "graph JSON used instead of a family spec");
    app.add_option("--vertex-cap", cap, "vertex cap for constructions")->check(CLI::PositiveNumber);

    std::vector<std::string> spec;
    bool closed_form = false, rainbow_flag = false, augment = false;
    std::optional<int> l, k;
    int s = -1, n = 0;
    std::string check, recheck_file;

    auto* sp = app.add_subcommand("spectrum", "k-spectrum of a graph");
    sp->add_option("family", spec, "family spec, e.g. C5 or DS 2 2");
    sp->add_flag("--closed-form", closed_form, "use the double-star closed form");

    auto* bd = app.add_subcommand("bounds", "bound reports for a tree family");
    bd->add_option("family", spec)->required();
    bd->add_flag("--rainbow", rainbow_flag, "rainbow bounds (double stars)");
    bd->add_option("--l", l, "double-star k-unique parameter l");

    auto* cs = app.add_subcommand("construct", "emit a family graph or its augmentation as JSON");
    cs->add_option("family", spec);
    cs->add_flag("--augment", augment, "build the augmented tree");
    cs->add_option("--l", l, "pendants added for double stars");

    auto* vf = app.add_subcommand("verify", "run a verification and emit a certificate");
    vf->add_option("check", check, "k6-rainbow-free | k6-universal-3unique | k2s4 | reduction");
    vf->add_option("family", spec, "family for reduction checks");
    vf->add_option("--s", s, "s for the K_{2s+4} check");
    vf->add_option("--l", l, "double-star augmentation size");
    vf->add_option("--k", k, "unique-edge threshold (default: rainbow, or j+2l for DS)");
    vf->add_option("--recheck", recheck_file, "re-validate a serialized certificate, graph or spectrum");

    auto* se = app.add_subcommand("search", "exact ex_k(n, F) by brute force");
    se->add_option("--n", n, "vertex count")->required()->check(CLI::Range(1, kMaxBruteOrder));
    se->add_option("--pattern", spec, "forbidden family spec")->expected(1, 3);
    se->add_option("--k", k, "unique-edge threshold");
    se->add_flag("--rainbow", rainbow_flag, "rainbow version (k = ||F||)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }
    if (budget_opt > 0)
        cfg.budget = budget_opt;

    try {
        if (*sp) {
            cfg.command = "spectrum";
            return cmd_spectrum(cfg, spec, closed_form);
        }
        if (*bd) {
            cfg.command = "bounds";
            return cmd_bounds(cfg, spec, rainbow_flag, l, cap);
        }
        if (*cs) {
            cfg.command = "construct";
            return cmd_construct(cfg, spec, augment, l, cap);
        }
        if (*vf) {
            cfg.command = "verify";
            if (check.empty() && recheck_file.empty())
                throw UsageError("verify needs a check name or --recheck");
            return cmd_verify(cfg, check, spec, s, l, k, recheck_file, cap);
        }
        if (*se) {
            cfg.command = "search";
            return cmd_search(cfg, n, spec, k, rainbow_flag);
        }
    }
    catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --vertex-cap)\n";
        return usage;
    }
    catch (const json::exception& e) {
        std::cerr << "error: bad JSON input: " << e.what() << '\n';
        return usage;
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
