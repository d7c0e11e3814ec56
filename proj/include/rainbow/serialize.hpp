#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "rainbow/coloring.hpp"
#include "rainbow/detect.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

using json = nlohmann::json;

/// Bumped whenever a change could alter search results or certificate layout.
inline constexpr const char* kEngineVersion = "rainbow-engine/1";
inline constexpr int kSchemaVersion = 1;

inline std::string sha256_hex(std::string_view data)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::string hex;
    hex.reserve(2 * len);
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

// ---------------------------------------------------------------------------
// Graph

inline json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({u, v});
    json j{{"n", g.order()}, {"edges", std::move(edges)}};
    j["labels"] = g.labels();
    return j;
}

inline Graph graph_from_json(const json& j)
{
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: each edge must be a pair");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    std::vector<std::string> labels;
    if (j.contains("labels") && !j.at("labels").is_null())
        labels = j.at("labels").get<std::vector<std::string>>();
    Graph g(j.at("n").get<int>(), edges, std::move(labels));
    // serialized edge lists must already be canonical so indices line up
    if (g.edges().size() != edges.size() ||
        !std::equal(edges.begin(), edges.end(), g.edges().begin(), [](const Edge& a, const Edge& b) {
            return std::min(a.u, a.v) == b.u && std::max(a.u, a.v) == b.v;
        }))
        throw std::invalid_argument("graph json: edge list is not in canonical order");
    return g;
}

/// Hash of the structure only (n and edge list), independent of labels.
inline std::string graph_hash(const Graph& g)
{
    json edges = json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({u, v});
    return sha256_hex(json{{"n", g.order()}, {"edges", edges}}.dump());
}

// ---------------------------------------------------------------------------
// Coloring

inline json coloring_to_json(const Graph& g, const EdgeColoring& c)
{
    return {{"graph_hash", graph_hash(g)}, {"colors", c.vector()}};
}

/// Parses a coloring and checks it against g (hash, length, properness).
inline EdgeColoring coloring_from_json(const Graph& g, const json& j)
{
    if (j.contains("graph_hash") && j.at("graph_hash").get<std::string>() != graph_hash(g))
        throw std::invalid_argument("coloring json: graph hash mismatch");
    auto colors = j.at("colors").get<std::vector<Color>>();
    if (colors.size() != g.size())
        throw std::invalid_argument("coloring json: wrong number of colors");
    return EdgeColoring(g, std::move(colors));
}

// ---------------------------------------------------------------------------
// Detection

inline json embedding_to_json(const Embedding& e) { return {{"vertex_map", e.vertex_map}, {"edge_map", e.edge_map}}; }

inline Embedding embedding_from_json(const json& j)
{
    return {j.at("vertex_map").get<std::vector<Vertex>>(), j.at("edge_map").get<std::vector<EdgeIndex>>()};
}

inline json report_to_json(const UniquenessReport& r)
{
    return {{"vertex_map", r.embedding.vertex_map},
            {"edge_map", r.embedding.edge_map},
            {"edge_colors", r.color_multiset},
            {"unique_count", r.unique_count}};
}

} // namespace rainbow
