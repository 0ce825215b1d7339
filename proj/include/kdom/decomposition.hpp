#pragma once

// Low-boundary clustering: partitions a graph into connected low-diameter
// blocks whose joint boundary (vertices with a neighbor in another block)
// stays below a requested fraction of the vertex count. Implemented as
// iterated ball carving: repeatedly grow a BFS ball in the unprocessed
// remainder around its maximum-id vertex until the ball's own boundary
// fraction drops under a per-ball budget, then carve it off. If the global
// boundary check fails, the per-ball budget halves and carving restarts; a
// small enough budget forces whole-component blocks with empty boundary, so
// the retry loop converges. The returned partition always satisfies the
// contract — a violating partition is an error, never a result.

#include "kdom/graph.hpp"

namespace kdom {

struct ClusterPartition {
    std::vector<VertexSet> blocks;      // carve order
    VertexSet boundary;                 // ∂(P)
    int max_block_diameter = 0;
    double epsilon_target = 0.0;
    std::vector<int> block_diameters;
    double achieved_fraction = 0.0;
    int attempts_used = 0;
};

struct ContractFailure : std::runtime_error {
    double achieved_fraction;

    ContractFailure(double fraction, double target)
        : std::runtime_error("decomposition: achieved boundary fraction " +
                             std::to_string(fraction) + " exceeds target " +
                             std::to_string(target)),
          achieved_fraction(fraction) {}
};

namespace detail {

inline VertexSet boundary_of(const Graph& g, const std::vector<VertexSet>& blocks) {
    std::map<VertexId, std::size_t> block_of;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (VertexId v : blocks[b]) block_of.emplace(v, b);
    VertexSet boundary;
    for (const auto& block : blocks)
        for (VertexId v : block)
            for (VertexId w : g.neighbors(v))
                if (block_of.at(w) != block_of.at(v)) {
                    boundary.insert(v);
                    break;
                }
    return boundary;
}

inline std::vector<VertexSet> carve_blocks(const Graph& g, double per_ball_budget) {
    std::vector<VertexSet> blocks;
    std::vector<char> processed(static_cast<std::size_t>(g.order()), 0);
    // Max-id seeds: vertices() is ascending, walk backwards.
    for (int seed = g.order() - 1; seed >= 0; --seed) {
        if (processed[static_cast<std::size_t>(seed)]) continue;
        // Grow a BFS ball in the remainder until its vertex boundary within
        // the remainder is small relative to the ball. Only the outermost
        // BFS layer can touch undiscovered remainder vertices.
        std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
        dist[static_cast<std::size_t>(seed)] = 0;
        std::vector<int> ball{seed};
        std::vector<int> frontier{seed};
        while (true) {
            std::size_t boundary = 0;
            for (int v : frontier)
                for (int w : g.neighbors_by_index(v))
                    if (!processed[static_cast<std::size_t>(w)] &&
                        dist[static_cast<std::size_t>(w)] < 0) {
                        ++boundary;
                        break;
                    }
            if (static_cast<double>(boundary) <=
                per_ball_budget * static_cast<double>(ball.size()))
                break;
            std::vector<int> next;
            for (int v : frontier)
                for (int w : g.neighbors_by_index(v))
                    if (!processed[static_cast<std::size_t>(w)] &&
                        dist[static_cast<std::size_t>(w)] < 0) {
                        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                        next.push_back(w);
                    }
            ball.insert(ball.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        VertexSet block;
        for (int v : ball) {
            processed[static_cast<std::size_t>(v)] = 1;
            block.insert(g.id_at(v));
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace detail

inline ClusterPartition low_boundary_partition(const Graph& g, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("low_boundary_partition: epsilon must be in (0,1)");
    if (g.order() == 0) throw std::invalid_argument("low_boundary_partition: empty graph");
    const int max_attempts = 48;
    double budget = epsilon / 2.0;
    double last_fraction = 1.0;
    for (int attempt = 1; attempt <= max_attempts; ++attempt, budget /= 2.0) {
        std::vector<VertexSet> blocks = detail::carve_blocks(g, budget);
        VertexSet boundary = detail::boundary_of(g, blocks);
        last_fraction = static_cast<double>(boundary.size()) / static_cast<double>(g.order());
        if (static_cast<double>(boundary.size()) <= epsilon * static_cast<double>(g.order())) {
            ClusterPartition p;
            p.blocks = std::move(blocks);
            p.boundary = std::move(boundary);
            p.epsilon_target = epsilon;
            p.achieved_fraction = last_fraction;
            p.attempts_used = attempt;
            for (const auto& block : p.blocks) {
                int d = *diameter(induced_subgraph(g, block));
                p.block_diameters.push_back(d);
                p.max_block_diameter = std::max(p.max_block_diameter, d);
            }
            return p;
        }
    }
    throw ContractFailure(last_fraction, epsilon);
}

struct PartitionReport {
    bool covers_exactly = false;
    bool blocks_connected = false;
    bool boundary_matches = false;
    bool diameters_match = false;
    bool boundary_within_target = false;
    std::size_t boundary_size = 0;
    double boundary_fraction = 0.0;
    int max_block_diameter = 0;

    bool pass() const {
        return covers_exactly && blocks_connected && boundary_matches && diameters_match &&
               boundary_within_target;
    }
};

// Recomputes every clause of the partition contract from scratch.
inline PartitionReport verify_partition(const Graph& g, const ClusterPartition& p,
                                        double epsilon) {
    PartitionReport report;
    std::size_t covered = 0;
    std::map<VertexId, std::size_t> block_of;
    bool disjoint = true;
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (VertexId v : p.blocks[b]) {
            ++covered;
            if (!block_of.emplace(v, b).second) disjoint = false;
        }
    report.covers_exactly = disjoint && covered == static_cast<std::size_t>(g.order()) &&
                            std::all_of(block_of.begin(), block_of.end(),
                                        [&](const auto& kv) { return g.has_vertex(kv.first); });
    if (!report.covers_exactly) return report;

    report.blocks_connected = true;
    report.diameters_match = true;
    for (const auto& block : p.blocks) {
        Graph sub = induced_subgraph(g, block);
        auto d = diameter(sub);
        if (!d) {
            report.blocks_connected = false;
            break;
        }
        report.max_block_diameter = std::max(report.max_block_diameter, *d);
        if (*d > p.max_block_diameter) report.diameters_match = false;
    }
    VertexSet boundary = detail::boundary_of(g, p.blocks);
    report.boundary_size = boundary.size();
    report.boundary_fraction =
        g.order() == 0 ? 0.0 : static_cast<double>(boundary.size()) / static_cast<double>(g.order());
    report.boundary_matches = boundary == p.boundary;
    report.boundary_within_target =
        static_cast<double>(boundary.size()) <= epsilon * static_cast<double>(g.order());
    return report;
}

}  // namespace kdom
