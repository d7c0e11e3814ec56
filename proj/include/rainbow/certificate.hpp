#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/serialize.hpp"

namespace rainbow {

enum class CertificateKind { avoider, exhaustion, k6_universal, reduction };
enum class Verdict { pass, fail, budget_exhausted };

NLOHMANN_JSON_SERIALIZE_ENUM(CertificateKind, {{CertificateKind::avoider, "avoider"},
                                               {CertificateKind::exhaustion, "exhaustion"},
                                               {CertificateKind::k6_universal, "k6_universal"},
                                               {CertificateKind::reduction, "reduction"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Verdict, {{Verdict::pass, "PASS"},
                                       {Verdict::fail, "FAIL"},
                                       {Verdict::budget_exhausted, "BUDGET_EXHAUSTED"}})

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::budget_exhausted: return "BUDGET_EXHAUSTED";
    }
    return "?";
}

/// Machine-checkable record of a search or verification.
///
/// Avoider payloads carry {graph, pattern, k, mode, coloring} and re-validate
/// on load. Exhaustion payloads record the enumeration scheme so a later
/// engine can tell whether the result is comparable.
struct Certificate {
    CertificateKind kind = CertificateKind::avoider;
    std::string operation;
    Verdict verdict = Verdict::pass;
    json params = json::object();
    json payload = json::object();
    std::uint64_t nodes_visited = 0;
    bool exhaustive = true;
    std::vector<std::string> assumptions;
};

inline json certificate_to_json(const Certificate& c)
{
    return {{"schema", kSchemaVersion},
            {"engine", kEngineVersion},
            {"kind", c.kind},
            {"operation", c.operation},
            {"verdict", c.verdict},
            {"params", c.params},
            {"payload", c.payload},
            {"nodes_visited", c.nodes_visited},
            {"exhaustive", c.exhaustive},
            {"assumptions", c.assumptions}};
}

inline Certificate certificate_from_json(const json& j)
{
    if (j.value("schema", 0) != kSchemaVersion)
        throw std::invalid_argument("certificate: unsupported schema");
    Certificate c;
    c.kind = j.at("kind").get<CertificateKind>();
    c.operation = j.at("operation").get<std::string>();
    c.verdict = j.at("verdict").get<Verdict>();
    c.params = j.at("params");
    c.payload = j.at("payload");
    c.nodes_visited = j.at("nodes_visited").get<std::uint64_t>();
    c.exhaustive = j.at("exhaustive").get<bool>();
    c.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    return c;
}

/// Avoider certificate for a host coloring that has no k-unique copy of the
/// pattern (mode "at_least") or no exactly-k-unique copy (mode "exactly").
inline Certificate make_avoider_certificate(std::string operation, const Graph& host, const EdgeColoring& c,
                                            const Graph& pattern, int k, std::uint64_t nodes)
{
    Certificate cert;
    cert.kind = CertificateKind::avoider;
    cert.operation = std::move(operation);
    cert.verdict = Verdict::pass;
    cert.nodes_visited = nodes;
    cert.payload = {{"host", graph_to_json(host)},
                    {"pattern", graph_to_json(pattern)},
                    {"k", k},
                    {"coloring", coloring_to_json(host, c)}};
    return cert;
}

/// Re-checks an avoider payload: the coloring is proper on the host and no
/// embedded pattern copy reaches k unique edges.
inline bool revalidate_avoider(const Certificate& cert)
{
    if (cert.kind != CertificateKind::avoider)
        return false;
    try {
        auto host = graph_from_json(cert.payload.at("host"));
        auto pattern = graph_from_json(cert.payload.at("pattern"));
        auto c = coloring_from_json(host, cert.payload.at("coloring"));
        int k = cert.payload.at("k").get<int>();
        return !find_k_unique(host, c, pattern, k, Match::at_least);
    }
    catch (const std::exception&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Content-addressed cache

inline std::filesystem::path default_cache_dir()
{
    if (const char* env = std::getenv("RT_CACHE_DIR"); env && *env)
        return env;
    return std::filesystem::path(".rainbow-cache");
}

/// Certificates keyed by sha256({operation, params, engine}).
class CertificateCache {
public:
    explicit CertificateCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    static std::string key(const std::string& operation, const json& params)
    {
        return sha256_hex(json{{"operation", operation}, {"params", params}, {"engine", kEngineVersion}}.dump());
    }

    std::filesystem::path path_for(const Certificate& c) const { return dir_ / (key(c.operation, c.params) + ".json"); }

    std::filesystem::path store(const Certificate& c) const { return store(c, c.params); }

    /// Stores under key(c.operation, lookup_params), for callers that look
    /// certificates up by their own request parameters.
    std::filesystem::path store(const Certificate& c, const json& lookup_params) const
    {
        std::filesystem::create_directories(dir_);
        auto p = dir_ / (key(c.operation, lookup_params) + ".json");
        std::ofstream out(p, std::ios::binary | std::ios::trunc);
        out << certificate_to_json(c).dump(2) << '\n';
        if (!out)
            throw std::runtime_error("certificate cache: cannot write " + p.string());
        return p;
    }

    std::optional<Certificate> load(const std::string& operation, const json& params) const
    {
        auto p = dir_ / (key(operation, params) + ".json");
        std::ifstream in(p, std::ios::binary);
        if (!in)
            return std::nullopt;
        return certificate_from_json(json::parse(in));
    }

    const std::filesystem::path& dir() const noexcept { return dir_; }

private:
    std::filesystem::path dir_;
};

} // namespace rainbow
