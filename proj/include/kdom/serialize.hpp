#pragma once

// JSON views of run artifacts, used by the CLI and trace dumps.

#include <json.hpp>

#include "kdom/approx.hpp"
#include "kdom/decomposition.hpp"
#include "kdom/domset.hpp"
#include "kdom/voronoi.hpp"

namespace kdom {

inline nlohmann::json to_json(const VertexSet& s) {
    return nlohmann::json(std::vector<VertexId>(s.begin(), s.end()));
}

inline nlohmann::json to_json(const DomSetRun& run) {
    nlohmann::json chosen = nlohmann::json::object();
    for (const auto& [v, w] : run.chosen) chosen[std::to_string(v)] = w;
    return {{"D", to_json(run.selected)}, {"size", run.selected.size()},
            {"rounds", run.rounds},       {"messages", run.messages},
            {"chosen", std::move(chosen)}};
}

inline nlohmann::json trace_json(const DomSetRun& run) {
    nlohmann::json outputs = nlohmann::json::object();
    for (const auto& [v, w] : run.chosen) outputs[std::to_string(v)] = w;
    return {{"rounds", run.rounds}, {"messages", run.messages}, {"outputs", std::move(outputs)}};
}

inline nlohmann::json to_json(const VoronoiPartition& p) {
    nlohmann::json cells = nlohmann::json::object();
    nlohmann::json borders = nlohmann::json::object();
    nlohmann::json cover = nlohmann::json::object();
    for (const auto& [c, members] : p.cells) cells[std::to_string(c)] = to_json(members);
    for (const auto& [c, border] : p.borders) borders[std::to_string(c)] = to_json(border);
    for (const auto& [c, v] : p.cover_vertex) cover[std::to_string(c)] = v;
    return {{"centers", to_json(p.centers)},
            {"k", p.k},
            {"cells", std::move(cells)},
            {"borders", std::move(borders)},
            {"cover_vertex", std::move(cover)}};
}

inline nlohmann::json to_json(const ClusterPartition& p) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : p.blocks) blocks.push_back(to_json(b));
    return {{"blocks", std::move(blocks)},
            {"boundary", to_json(p.boundary)},
            {"max_block_diameter", p.max_block_diameter},
            {"block_diameters", p.block_diameters},
            {"epsilon_target", p.epsilon_target},
            {"achieved_fraction", p.achieved_fraction}};
}

inline nlohmann::json to_json(const ApproxRun& run) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : run.blocks) blocks.push_back(to_json(b));
    nlohmann::json solutions = nlohmann::json::array();
    for (const auto& q : run.block_solutions) solutions.push_back(to_json(q));
    nlohmann::json audit{{"result_size", run.audit.result_size},
                         {"boundary_size", run.audit.boundary_size},
                         {"seed_size", run.audit.seed_size},
                         {"cell_count", run.audit.cell_count},
                         {"partition_boundary_size", run.audit.partition_boundary_size},
                         {"block_solution_sizes", run.audit.block_solution_sizes},
                         {"max_intercell_edges", run.audit.max_intercell_edges},
                         {"epsilon_used", run.audit.epsilon_used},
                         {"valid", run.audit.valid},
                         {"single_block", run.audit.single_block},
                         {"boundary_edge_product_ok", run.audit.boundary_edge_product_ok}};
    if (run.variant == ApproxVariant::star_cells) {
        audit["border_center_count"] = run.audit.border_center_count;
        audit["transfer_ok"] = run.audit.transfer_ok;
    }
    nlohmann::json j{{"variant", run.variant == ApproxVariant::star_cells ? "bounded-degree" : "voronoi"},
                     {"seed", to_json(run.seed)},
                     {"epsilon_used", run.epsilon_used},
                     {"cells", to_json(run.cells)},
                     {"partition", to_json(run.partition)},
                     {"blocks", std::move(blocks)},
                     {"boundary", to_json(run.boundary)},
                     {"block_solutions", std::move(solutions)},
                     {"Q", to_json(run.result)},
                     {"audit", std::move(audit)}};
    if (run.variant == ApproxVariant::star_cells) j["border_centers"] = to_json(run.border_centers);
    return j;
}

}  // namespace kdom
