#pragma once

// Graph file I/O. Canonical format is JSON
//   {"n": <count>, "vertices": [ids...], "edges": [[u,v]...]}
// with sorted vertices and lexicographically sorted edges, u<v. Readers also
// accept whitespace-separated edge-list text ("u v" per line, '#' comments,
// vertex set inferred from endpoints). Writers always emit canonical JSON.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "kdom/graph.hpp"

namespace kdom {

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    j["vertices"] = g.vertices();
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    nlohmann::json je = nlohmann::json::array();
    for (const auto& [u, v] : edges) je.push_back({u, v});
    j["edges"] = je;
    return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph json: expected object with \"vertices\" and \"edges\"");
    std::vector<VertexId> verts = j.at("vertices").get<std::vector<VertexId>>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: edge must be a pair");
        edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    if (j.contains("n") && j.at("n").get<std::size_t>() != verts.size())
        throw std::invalid_argument("graph json: n does not match vertex count");
    return Graph::make(verts, edges);
}

inline Graph graph_from_edge_list_text(const std::string& text) {
    std::vector<Edge> edges;
    VertexSet verts;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        VertexId u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v)) throw std::invalid_argument("graph text: expected two ids per line");
        VertexId extra;
        if (ls >> extra) throw std::invalid_argument("graph text: expected two ids per line");
        edges.emplace_back(u, v);
        verts.insert(u);
        verts.insert(v);
    }
    return Graph::make(std::vector<VertexId>(verts.begin(), verts.end()), edges);
}

// Sniffs JSON vs edge-list text by the first non-space character.
inline Graph parse_graph(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return graph_from_json(nlohmann::json::parse(text));
        return graph_from_edge_list_text(text);
    }
    throw std::invalid_argument("graph: empty input");
}

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

inline void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    out << graph_to_json(g).dump(2) << "\n";
}

}  // namespace kdom
