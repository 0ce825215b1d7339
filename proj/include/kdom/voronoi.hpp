#pragma once

// Voronoi cell machinery: cells grown around a center set (nearest center,
// ties to the maximum center id), per-cell border vertices, the cell's
// covering vertex v_C, and the contracted cell graph.

#include "kdom/graph.hpp"

namespace kdom {

struct VoronoiPartition {
    VertexSet centers;
    int k = 0;                                  // radius context for v_C
    std::map<VertexId, VertexId> cell_of;       // vertex -> center
    std::map<VertexId, VertexSet> cells;        // center -> members
    std::map<VertexId, VertexSet> borders;      // center -> border vertices
    std::map<VertexId, VertexId> cover_vertex;  // center -> v_C
};

// Builds the Voronoi partition of g around `centers`. Every vertex must be
// reachable from some center (apply per component otherwise). The covering
// vertex of a cell is the member within distance k of the whole cell with
// maximal |N^k|, then maximal id, per the selection rule the analysis uses;
// when no member k-covers the cell (possible only when the centers are not
// distance-k dominating) the candidates fall back to the members of minimum
// eccentricity with respect to the cell.
inline VoronoiPartition build_voronoi(const Graph& g, const VertexSet& centers, int k) {
    if (centers.empty()) throw std::invalid_argument("build_voronoi: empty center set");
    if (k < 0) throw std::invalid_argument("build_voronoi: negative k");
    for (VertexId c : centers)
        if (!g.has_vertex(c)) throw std::invalid_argument("build_voronoi: center not in graph");

    VoronoiPartition p;
    p.centers = centers;
    p.k = k;

    const std::size_t n = static_cast<std::size_t>(g.order());
    std::vector<int> best_dist(n, -1);
    std::vector<VertexId> best_center(n, -1);
    for (VertexId c : centers) {
        std::vector<int> dist = g.bfs_from_index(g.index_of(c));
        for (std::size_t i = 0; i < n; ++i) {
            if (dist[i] < 0) continue;
            if (best_dist[i] < 0 || dist[i] < best_dist[i] ||
                (dist[i] == best_dist[i] && c > best_center[i])) {
                best_dist[i] = dist[i];
                best_center[i] = c;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (best_dist[i] < 0)
            throw std::invalid_argument("build_voronoi: vertex unreachable from every center");
        VertexId v = g.id_at(static_cast<int>(i));
        p.cell_of.emplace(v, best_center[i]);
        p.cells[best_center[i]].insert(v);
    }

    for (const auto& [c, members] : p.cells) {
        VertexSet border;
        for (VertexId v : members)
            for (VertexId w : g.neighbors(v))
                if (p.cell_of.at(w) != c) {
                    border.insert(v);
                    break;
                }
        p.borders.emplace(c, std::move(border));
    }

    // Tie-break consistency makes each cell connected (a vertex's
    // shortest-path parent toward its center shares the cell); checked here
    // rather than assumed.
    for (const auto& [c, members] : p.cells)
        if (!is_connected(induced_subgraph(g, members)))
            throw std::logic_error("build_voronoi: cell is not connected");

    for (const auto& [c, members] : p.cells) {
        std::vector<VertexId> candidates;
        int best_ecc = -1;
        std::map<VertexId, long long> ball_size;
        std::map<VertexId, int> ecc;
        for (VertexId v : members) {
            std::vector<int> dist = g.bfs_from_index(g.index_of(v));
            int e = 0;
            long long ball = 0;
            for (VertexId w : members) e = std::max(e, dist[static_cast<std::size_t>(g.index_of(w))]);
            for (int d : dist)
                if (d >= 0 && d <= k) ++ball;
            ecc.emplace(v, e);
            ball_size.emplace(v, ball);
            if (best_ecc < 0 || e < best_ecc) best_ecc = e;
        }
        for (VertexId v : members)
            if (ecc.at(v) <= (best_ecc <= k ? k : best_ecc)) candidates.push_back(v);
        VertexId pick = -1;
        long long pick_ball = -1;
        for (VertexId v : candidates) {
            if (ball_size.at(v) > pick_ball || (ball_size.at(v) == pick_ball && v > pick)) {
                pick = v;
                pick_ball = ball_size.at(v);
            }
        }
        p.cover_vertex.emplace(c, pick);
    }
    return p;
}

// V*: the union of all border sets.
inline VertexSet border_union(const VoronoiPartition& p) {
    VertexSet out;
    for (const auto& [c, border] : p.borders) out.insert(border.begin(), border.end());
    return out;
}

// Contracts every cell to a vertex; block ids are the center ids.
inline QuotientGraph cell_graph(const Graph& g, const VoronoiPartition& p) {
    std::vector<VertexSet> blocks;
    std::vector<VertexId> ids;
    for (const auto& [c, members] : p.cells) {
        ids.push_back(c);
        blocks.push_back(members);
    }
    return contract_partition(g, blocks, ids);
}

// Number of g-edges with one endpoint in each of two distinct cells.
inline std::size_t intercell_edge_count(const Graph& g, const VoronoiPartition& p, VertexId a,
                                        VertexId b) {
    if (a == b) throw std::invalid_argument("intercell_edge_count: centers must differ");
    if (!p.cells.count(a) || !p.cells.count(b))
        throw std::invalid_argument("intercell_edge_count: unknown center");
    std::size_t count = 0;
    for (VertexId v : p.cells.at(a))
        for (VertexId w : g.neighbors(v))
            if (p.cell_of.at(w) == b) ++count;
    return count;
}

}  // namespace kdom
