#pragma once

// JSON (de)serialization for embeddings, plane embeddings, verification
// reports, and certificate files.  Rationals travel as lowest-terms "p/q"
// strings so nothing ever passes through floating point.

#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdist/distance_graphs.hpp"
#include "qdist/regularizer.hpp"

namespace qdist {

using Json = nlohmann::json;

inline Json embedding_to_json(const Embedding& e) {
    std::vector<std::string> names = e.names;
    if (names.size() != e.graph.vertex_count) {
        names.clear();
        for (std::size_t i = 0; i < e.graph.vertex_count; ++i) {
            names.push_back("p" + std::to_string(i));
        }
    }
    Json j;
    j["n"] = e.n;
    j["r"] = e.r.to_string();
    j["vertices"] = names;
    Json edges = Json::array();
    for (auto [u, v] : e.graph.edges) edges.push_back({names[u], names[v]});
    j["edges"] = edges;
    Json coords = Json::object();
    for (std::size_t i = 0; i < e.graph.vertex_count; ++i) {
        Json c = Json::array();
        for (const auto& x : e.coords[i].coords()) c.push_back(x.to_string());
        coords[names[i]] = c;
    }
    j["coords"] = coords;
    return j;
}

inline Embedding embedding_from_json(const Json& j) {
    Embedding e;
    e.n = j.at("n").get<std::size_t>();
    e.r = Rational::parse(j.at("r").get<std::string>());
    e.names = j.at("vertices").get<std::vector<std::string>>();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < e.names.size(); ++i) index[e.names[i]] = i;
    e.graph.vertex_count = e.names.size();
    for (const auto& edge : j.at("edges")) {
        e.graph.edges.emplace_back(index.at(edge.at(0).get<std::string>()),
                                   index.at(edge.at(1).get<std::string>()));
    }
    const auto& coords = j.at("coords");
    for (const auto& name : e.names) {
        std::vector<Rational> xs;
        for (const auto& s : coords.at(name)) xs.push_back(Rational::parse(s.get<std::string>()));
        if (xs.size() != e.n) throw std::invalid_argument("embedding JSON: bad coord dimension");
        e.coords.push_back(QVec(std::move(xs)));
    }
    return e;
}

inline Json report_to_json(const VerifyReport& rep, const std::vector<std::string>& names) {
    Json j;
    j["pass"] = rep.pass;
    j["edges_pass"] = rep.edges_pass;
    Json edges = Json::array();
    for (const auto& c : rep.edges) {
        edges.push_back({{"u", names[c.u]},
                         {"v", names[c.v]},
                         {"squared_distance", c.actual.to_string()},
                         {"ok", c.ok}});
    }
    j["edges"] = edges;
    if (rep.faithful_checked) {
        Json bad = Json::array();
        for (const auto& c : rep.nonedges_at_r) bad.push_back({names[c.u], names[c.v]});
        j["nonedges_at_distance"] = bad;
    }
    return j;
}

// ---------------------------------------------------------------------------
// Plane embeddings (decimal coordinates)

inline std::string double_to_string(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline Json plane_embedding_to_json(const PlaneEmbedding& g) {
    Json j;
    j["vertex_count"] = g.graph.vertex_count;
    Json edges = Json::array();
    for (auto [u, v] : g.graph.edges) edges.push_back({u, v});
    j["edges"] = edges;
    Json coords = Json::array();
    for (const auto& p : g.coords) {
        coords.push_back({double_to_string(p[0]), double_to_string(p[1])});
    }
    j["coords"] = coords;
    j["tolerance"] = double_to_string(g.tolerance);
    j["worst_edge_deviation"] = double_to_string(g.worst_edge_deviation);
    return j;
}

inline PlaneEmbedding plane_embedding_from_json(const Json& j) {
    PlaneEmbedding g;
    g.graph.vertex_count = j.at("vertex_count").get<std::size_t>();
    for (const auto& e : j.at("edges")) {
        g.graph.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    }
    for (const auto& c : j.at("coords")) {
        g.coords.push_back({std::stod(c.at(0).get<std::string>()),
                            std::stod(c.at(1).get<std::string>())});
    }
    if (j.contains("tolerance")) g.tolerance = std::stod(j.at("tolerance").get<std::string>());
    g.update_worst_deviation();
    return g;
}

// ---------------------------------------------------------------------------
// Certificates

constexpr const char* kSchemaVersion = "1";

inline Json make_certificate(const Json& command, const Json& payload, const Json& report) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    j["embedding"] = payload;
    j["report"] = report;
    return j;
}

inline std::string dump_certificate(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qdist
