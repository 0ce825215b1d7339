#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately naive — exhaustive enumeration, Floyd–Warshall — so they can
// serve as oracles for the real implementations.

#include <map>
#include <vector>

#include "kdom/graph.hpp"

namespace kdom::testing {

constexpr int kInf = 1 << 28;

// All-pairs distances by Floyd–Warshall, indexed by vertex id.
inline std::map<VertexId, std::map<VertexId, int>> naive_all_pairs(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), kInf));
    for (int i = 0; i < n; ++i) {
        d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
        for (int j : g.neighbors_by_index(i)) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    }
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    std::min(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                             d[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] +
                                 d[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)]);
    std::map<VertexId, std::map<VertexId, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[g.id_at(i)][g.id_at(j)] = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return out;
}

namespace detail {

inline void all_simple_paths(const Graph& g, int at, int target, int budget,
                             const std::vector<char>& forbidden_interior,
                             std::vector<char>& on_path, std::vector<int>& path,
                             std::vector<char>& marked) {
    if (at == target) {
        for (int v : path) marked[static_cast<std::size_t>(v)] = 1;
        return;
    }
    if (budget == 0) return;
    for (int w : g.neighbors_by_index(at)) {
        if (on_path[static_cast<std::size_t>(w)]) continue;
        if (w != target && forbidden_interior[static_cast<std::size_t>(w)]) continue;
        on_path[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        all_simple_paths(g, w, target, budget - 1, forbidden_interior, on_path, path, marked);
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = 0;
    }
}

}  // namespace detail

// Exhaustive Q-path vertex collection: every simple path between two
// distinct Q vertices with no interior Q vertex and length at most h, with
// no pruning at all.
inline VertexSet naive_q_path_vertices(const Graph& g, const VertexSet& q, int h) {
    VertexSet out(q);
    std::vector<char> in_q(static_cast<std::size_t>(g.order()), 0);
    for (VertexId v : q) in_q[static_cast<std::size_t>(g.index_of(v))] = 1;
    std::vector<char> marked(static_cast<std::size_t>(g.order()), 0);
    for (VertexId u : q)
        for (VertexId v : q) {
            if (u >= v) continue;
            std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
            std::vector<int> path{g.index_of(u)};
            on_path[static_cast<std::size_t>(g.index_of(u))] = 1;
            detail::all_simple_paths(g, g.index_of(u), g.index_of(v), h, in_q, on_path, path,
                                     marked);
        }
    for (int i = 0; i < g.order(); ++i)
        if (marked[static_cast<std::size_t>(i)]) out.insert(g.id_at(i));
    return out;
}

// Exhaustive minimum distance-k dominating set by subset enumeration in
// increasing size. Only sensible for n <= ~12.
inline std::size_t naive_gamma(const Graph& g, int k) {
    const int n = g.order();
    std::vector<std::uint64_t> cover(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        std::vector<int> dist = g.bfs_from_index(i);
        for (int j = 0; j < n; ++j)
            if (dist[static_cast<std::size_t>(j)] >= 0 && dist[static_cast<std::size_t>(j)] <= k)
                cover[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    }
    const std::uint64_t full = n == 64 ? ~0ull : (std::uint64_t{1} << n) - 1;
    for (int size = 1; size <= n; ++size) {
        // All subsets of the given size, lexicographic.
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::uint64_t covered = 0;
            for (int p : pick) covered |= cover[static_cast<std::size_t>(p)];
            if (covered == full) return static_cast<std::size_t>(size);
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return 0;  // empty graph
}

namespace detail {

inline bool mask_connected(const Graph& g, std::uint32_t mask) {
    if (!mask) return false;
    int start = std::countr_zero(mask);
    std::uint32_t seen = std::uint32_t{1} << start;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < g.order(); ++v) {
            if (!((seen >> v) & 1)) continue;
            for (int w : g.neighbors_by_index(v))
                if (((mask >> w) & 1) && !((seen >> w) & 1)) {
                    seen |= std::uint32_t{1} << w;
                    grew = true;
                }
        }
    }
    return seen == mask;
}

inline bool mask_adjacent(const Graph& g, std::uint32_t a, std::uint32_t b) {
    for (int v = 0; v < g.order(); ++v) {
        if (!((a >> v) & 1)) continue;
        for (int w : g.neighbors_by_index(v))
            if ((b >> w) & 1) return true;
    }
    return false;
}

inline bool pack_connectors(const Graph& g, std::uint32_t remaining, std::uint32_t hub_a,
                            std::uint32_t hub_b, int t) {
    if (t == 0) return true;
    // Every nonempty connected subset of the remainder adjacent to both hubs.
    for (std::uint32_t s = remaining; s; s = (s - 1) & remaining) {
        if (!mask_connected(g, s)) continue;
        if (!mask_adjacent(g, s, hub_a) || !mask_adjacent(g, s, hub_b)) continue;
        if (pack_connectors(g, remaining & ~s, hub_a, hub_b, t - 1)) return true;
    }
    return false;
}

}  // namespace detail

// Fully recursive K_{2,t}-minor search over branch-set masks; exponential in
// a worse way than the library version, so keep n <= ~9.
inline bool naive_has_k2t_minor(const Graph& g, int t) {
    const int n = g.order();
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t a = 1; a <= full; ++a) {
        if (!detail::mask_connected(g, a)) continue;
        std::uint32_t rest = full & ~a;
        for (std::uint32_t b = rest; b; b = (b - 1) & rest) {
            if ((std::uint32_t)std::countr_zero(b) < (std::uint32_t)std::countr_zero(a)) continue;
            if (!detail::mask_connected(g, b)) continue;
            if (detail::pack_connectors(g, full & ~a & ~b, a, b, t)) return true;
        }
    }
    return false;
}

inline Graph path_graph(int n) {
    std::vector<VertexId> verts;
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i) {
        verts.push_back(i);
        if (i + 1 < n) edges.emplace_back(i, i + 1);
    }
    return Graph::make(verts, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<VertexId> verts;
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i) {
        verts.push_back(i);
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph::make(verts, edges);
}

}  // namespace kdom::testing
