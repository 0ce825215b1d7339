#pragma once

// (1+alpha)-style approximation pipeline: seed with the constant-factor
// selection, cluster the contracted cell graph into low-boundary blocks,
// take the lifted block boundary, and solve each block exactly against its
// anchors. A star-cell variant covers bounded-degree inputs: cells are the
// closed stars of a distance-1 seed and the centers of boundary-touching
// cells join the result instead of the lifted boundary itself.
//
// epsilon can be supplied directly or derived from alpha via the
// closed-form constants; the derived value is far below 1/n for any
// feasible input, which collapses the clustering to whole components and
// makes the pipeline return exact optima (the audit records this).

#include "kdom/decomposition.hpp"
#include "kdom/domset.hpp"
#include "kdom/voronoi.hpp"

namespace kdom {

enum class EpsilonMode { direct, derived };
enum class ApproxVariant { voronoi_cells, star_cells };

struct LiftedPartition {
    std::vector<VertexSet> blocks;  // V_i, in cluster order
    VertexSet boundary;             // ∂(P')
};

// Expands a clustering of the cell graph back to the base graph: block V_i
// is the union of the cells whose centers lie in W_i; the boundary is
// recomputed in the base graph.
inline LiftedPartition lift_partition(const Graph& g, const VoronoiPartition& cells,
                                      const ClusterPartition& p) {
    VertexSet mentioned;
    for (const auto& block : p.blocks)
        for (VertexId c : block) {
            if (!cells.cells.count(c))
                throw std::invalid_argument("lift_partition: block vertex is not a cell center");
            if (!mentioned.insert(c).second)
                throw std::invalid_argument("lift_partition: center appears in two blocks");
        }
    if (mentioned.size() != cells.cells.size())
        throw std::invalid_argument("lift_partition: partition does not match the cell set");
    LiftedPartition lifted;
    for (const auto& block : p.blocks) {
        VertexSet v_i;
        for (VertexId c : block) {
            const VertexSet& cell = cells.cells.at(c);
            v_i.insert(cell.begin(), cell.end());
        }
        lifted.blocks.push_back(std::move(v_i));
    }
    lifted.boundary = detail::boundary_of(g, lifted.blocks);
    return lifted;
}

// Minimum Q_i ⊆ block such that Q_i ∪ anchors distance-k dominates the
// block, with distances taken in the whole graph. Ties between equal-size
// optima go to the lexicographically smallest vertex set.
inline VertexSet solve_block_exact(const Graph& g, const VertexSet& block, const VertexSet& anchors,
                                   int k, long long node_budget = 20'000'000) {
    if (block.empty()) throw std::invalid_argument("solve_block_exact: empty block");
    for (VertexId v : block)
        if (!g.has_vertex(v)) throw std::invalid_argument("solve_block_exact: block vertex not in graph");
    std::vector<VertexId> members(block.begin(), block.end());
    auto solver = detail::make_domination_cover(g, members, anchors, k);
    auto picked = solver.lex_min_optimal(node_budget);
    return VertexSet(picked.begin(), picked.end());
}

struct ApproxAudit {
    std::size_t result_size = 0;
    std::size_t boundary_size = 0;            // |∂(P')|
    std::size_t border_center_count = 0;      // star variant only
    std::size_t seed_size = 0;
    std::size_t cell_count = 0;
    std::size_t partition_boundary_size = 0;  // |∂(P)| on the cell graph
    std::vector<std::size_t> block_solution_sizes;
    std::size_t max_intercell_edges = 0;      // over block-crossing cell pairs
    double epsilon_used = 0.0;
    bool valid = false;
    bool single_block = false;
    bool boundary_edge_product_ok = false;  // |∂(P')| <= 2 |∂(P)| max_intercell_edges
    bool transfer_ok = true;                // star variant domination transfer
};

struct ApproxRun {
    ApproxVariant variant = ApproxVariant::voronoi_cells;
    VertexSet seed;                          // D (Voronoi) or S (star)
    double epsilon_used = 0.0;
    VoronoiPartition cells;
    QuotientGraph quotient;                  // H
    ClusterPartition partition;              // P over H
    std::vector<VertexSet> blocks;           // V_i
    VertexSet boundary;                      // ∂(P')
    VertexSet border_centers;                // star variant additions
    std::vector<VertexSet> block_solutions;  // Q_i
    VertexSet result;                        // Q
    ApproxAudit audit;
};

namespace detail {

// alpha / (2 delta(t,k) k^2 t^{2k t^k}), clamped away from zero: any value
// below 1/n already forces whole-component blocks, so the clamp is
// behaviorally invisible.
inline double derived_epsilon(double alpha, int k, int t) {
    long double log10_eps = std::log10(static_cast<long double>(alpha)) - std::log10(2.0L) -
                            log10_delta(k, t) - log10_intercell_bound(k, t);
    long double value = std::pow(10.0L, log10_eps);
    return std::max(static_cast<double>(value), 1e-300);
}

inline std::size_t max_crossing_intercell_edges(const Graph& g, const VoronoiPartition& cells,
                                                const QuotientGraph& h,
                                                const ClusterPartition& p) {
    std::map<VertexId, std::size_t> block_of;
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (VertexId c : p.blocks[b]) block_of.emplace(c, b);
    std::size_t best = 0;
    for (const auto& [a, b] : h.quotient.edges())
        if (block_of.at(a) != block_of.at(b))
            best = std::max(best, intercell_edge_count(g, cells, a, b));
    return best;
}

// Domination transfer: any vertex that could be distance-k dominated
// from outside its block must itself be within k of an added border center.
inline bool transfer_property_holds(const Graph& g, const std::vector<VertexSet>& blocks,
                                    const VertexSet& border_centers, int k) {
    std::vector<int> center_dist(static_cast<std::size_t>(g.order()), -1);
    {
        std::deque<int> queue;
        for (VertexId c : border_centers) {
            center_dist[static_cast<std::size_t>(g.index_of(c))] = 0;
            queue.push_back(g.index_of(c));
        }
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors_by_index(u))
                if (center_dist[static_cast<std::size_t>(w)] < 0) {
                    center_dist[static_cast<std::size_t>(w)] =
                        center_dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
        }
    }
    for (const auto& block : blocks) {
        // Distance from the rest of the graph, truncated at k.
        std::vector<int> out_dist(static_cast<std::size_t>(g.order()), -1);
        std::deque<int> queue;
        for (int i = 0; i < g.order(); ++i)
            if (!block.count(g.id_at(i))) {
                out_dist[static_cast<std::size_t>(i)] = 0;
                queue.push_back(i);
            }
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (out_dist[static_cast<std::size_t>(u)] == k) continue;
            for (int w : g.neighbors_by_index(u))
                if (out_dist[static_cast<std::size_t>(w)] < 0) {
                    out_dist[static_cast<std::size_t>(w)] = out_dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
        }
        for (VertexId v : block) {
            int i = g.index_of(v);
            bool cross_dominated = out_dist[static_cast<std::size_t>(i)] >= 0 &&
                                   out_dist[static_cast<std::size_t>(i)] <= k;
            bool near_center = center_dist[static_cast<std::size_t>(i)] >= 0 &&
                               center_dist[static_cast<std::size_t>(i)] <= k;
            if (cross_dominated && !near_center) return false;
        }
    }
    return true;
}

}  // namespace detail

inline ApproxRun k_domset_approx(const Graph& g, int k, int t, double value, EpsilonMode mode,
                                 ExecPolicy policy = {}, long long oracle_budget = 20'000'000) {
    if (k < 1) throw std::invalid_argument("k_domset_approx: k must be at least 1");
    if (t < 2) throw std::invalid_argument("k_domset_approx: t must be at least 2");
    if (g.order() == 0) throw std::invalid_argument("k_domset_approx: empty graph");
    auto diam = diameter(g);
    if (!diam) throw std::invalid_argument("k_domset_approx: graph must be connected");
    if (*diam < 4 * k)
        throw std::invalid_argument("k_domset_approx: requires diameter >= 4k");
    if (!(value > 0.0) || !(value < 1.0))
        throw std::invalid_argument("k_domset_approx: alpha/epsilon must be in (0,1)");

    ApproxRun run;
    run.variant = ApproxVariant::voronoi_cells;
    run.seed = domset(g, k, policy).selected;
    run.cells = build_voronoi(g, run.seed, k);
    run.quotient = cell_graph(g, run.cells);
    run.epsilon_used = mode == EpsilonMode::direct ? value : detail::derived_epsilon(value, k, t);
    run.partition = low_boundary_partition(run.quotient.quotient, run.epsilon_used);
    LiftedPartition lifted = lift_partition(g, run.cells, run.partition);
    run.blocks = std::move(lifted.blocks);
    run.boundary = std::move(lifted.boundary);
    run.result = run.boundary;
    for (const auto& block : run.blocks) {
        VertexSet anchors;
        for (VertexId v : block)
            if (run.boundary.count(v)) anchors.insert(v);
        VertexSet q_i = solve_block_exact(g, block, anchors, k, oracle_budget);
        run.result.insert(q_i.begin(), q_i.end());
        run.audit.block_solution_sizes.push_back(q_i.size());
        run.block_solutions.push_back(std::move(q_i));
    }

    run.audit.result_size = run.result.size();
    run.audit.boundary_size = run.boundary.size();
    run.audit.seed_size = run.seed.size();
    run.audit.cell_count = run.cells.cells.size();
    run.audit.partition_boundary_size = run.partition.boundary.size();
    run.audit.epsilon_used = run.epsilon_used;
    run.audit.single_block = run.partition.blocks.size() == 1;
    run.audit.max_intercell_edges =
        detail::max_crossing_intercell_edges(g, run.cells, run.quotient, run.partition);
    run.audit.boundary_edge_product_ok =
        run.boundary.size() <=
        2 * run.partition.boundary.size() * run.audit.max_intercell_edges ||
        run.boundary.empty();
    run.audit.valid = is_distance_k_dominating(g, run.result, k);
    return run;
}

// Maximum-degree derived boundedness constant: gamma_1 <= L(L-1)^k gamma_k
// holds whenever the maximum degree is at most L, for L >= 3 (a k-ball then
// has at most L(L-1)^k vertices; degree-2 graphs use L = 3).
inline double bounded_degree_c(int max_degree, int k) {
    if (max_degree < 3)
        throw std::invalid_argument("bounded_degree_c: the bound requires L >= 3");
    return static_cast<double>(max_degree) *
           std::pow(static_cast<double>(max_degree - 1), static_cast<double>(k));
}

inline ApproxRun bounded_degree_approx(const Graph& g, int k, int t, double c_bound, double value,
                                       EpsilonMode mode, ExecPolicy policy = {},
                                       long long oracle_budget = 20'000'000) {
    if (k < 1) throw std::invalid_argument("bounded_degree_approx: k must be at least 1");
    if (t < 2) throw std::invalid_argument("bounded_degree_approx: t must be at least 2");
    if (c_bound < 1.0) throw std::invalid_argument("bounded_degree_approx: C must be at least 1");
    if (g.order() == 0) throw std::invalid_argument("bounded_degree_approx: empty graph");
    if (!is_connected(g))
        throw std::invalid_argument("bounded_degree_approx: graph must be connected");
    if (!(value > 0.0) || !(value < 1.0))
        throw std::invalid_argument("bounded_degree_approx: alpha/epsilon must be in (0,1)");

    ApproxRun run;
    run.variant = ApproxVariant::star_cells;
    run.seed = domset(g, 1, policy).selected;
    // Star cells: a dominated vertex joins its maximum-id seed neighbor, so
    // these are exactly the Voronoi cells of the seed at radius 1.
    run.cells = build_voronoi(g, run.seed, 1);
    run.quotient = cell_graph(g, run.cells);
    if (mode == EpsilonMode::direct) {
        run.epsilon_used = value;
    } else {
        long double log10_eps = std::log10(static_cast<long double>(value)) -
                                std::log10(static_cast<long double>(c_bound)) - log10_delta(1, t);
        run.epsilon_used = std::max(static_cast<double>(std::pow(10.0L, log10_eps)), 1e-300);
    }
    run.partition = low_boundary_partition(run.quotient.quotient, run.epsilon_used);
    LiftedPartition lifted = lift_partition(g, run.cells, run.partition);
    run.blocks = std::move(lifted.blocks);
    run.boundary = std::move(lifted.boundary);
    for (VertexId v : run.boundary) run.border_centers.insert(run.cells.cell_of.at(v));
    run.result = run.border_centers;
    for (const auto& block : run.blocks) {
        VertexSet q_i = solve_block_exact(g, block, run.border_centers, k, oracle_budget);
        run.result.insert(q_i.begin(), q_i.end());
        run.audit.block_solution_sizes.push_back(q_i.size());
        run.block_solutions.push_back(std::move(q_i));
    }

    run.audit.result_size = run.result.size();
    run.audit.boundary_size = run.boundary.size();
    run.audit.border_center_count = run.border_centers.size();
    run.audit.seed_size = run.seed.size();
    run.audit.cell_count = run.cells.cells.size();
    run.audit.partition_boundary_size = run.partition.boundary.size();
    run.audit.epsilon_used = run.epsilon_used;
    run.audit.single_block = run.partition.blocks.size() == 1;
    run.audit.max_intercell_edges =
        detail::max_crossing_intercell_edges(g, run.cells, run.quotient, run.partition);
    run.audit.boundary_edge_product_ok =
        run.boundary.size() <=
        2 * run.partition.boundary.size() * run.audit.max_intercell_edges ||
        run.boundary.empty();
    run.audit.transfer_ok = detail::transfer_property_holds(g, run.blocks, run.border_centers, k);
    run.audit.valid = is_distance_k_dominating(g, run.result, k);
    return run;
}

}  // namespace kdom
