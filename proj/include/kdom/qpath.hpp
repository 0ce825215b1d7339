#pragma once

// Q-path machinery. A Q-path of positive length runs between two distinct
// vertices of Q and touches Q nowhere else; every vertex of Q is a trivial
// Q-path by itself. q_path_vertices(g, Q, h) collects every vertex lying on
// a Q-path of length at most h.
//
// Enumeration is a depth-bounded DFS from each vertex of Q; a branch is cut
// once the multi-source BFS distance back to Q cannot complete the path
// within the remaining edge budget. Worst-case cost is exponential in h,
// which stays tractable at the small h (<= 3k) and instance sizes this
// library targets.

#include <vector>

#include "kdom/graph.hpp"

namespace kdom {

namespace detail {

struct QPathSearch {
    const Graph& g;
    int h;
    std::vector<char> in_q;        // by index
    std::vector<int> dist_to_q;    // multi-source BFS from Q
    std::vector<char> on_path;     // DFS state
    std::vector<char> marked;      // result accumulator
    std::vector<int> stack;
    int start = 0;

    QPathSearch(const Graph& graph, const VertexSet& q, int bound)
        : g(graph), h(bound), in_q(static_cast<std::size_t>(graph.order()), 0),
          dist_to_q(static_cast<std::size_t>(graph.order()), -1),
          on_path(static_cast<std::size_t>(graph.order()), 0),
          marked(static_cast<std::size_t>(graph.order()), 0) {
        std::deque<int> queue;
        for (VertexId v : q) {
            int i = g.index_of(v);
            in_q[static_cast<std::size_t>(i)] = 1;
            marked[static_cast<std::size_t>(i)] = 1;  // trivial paths
            dist_to_q[static_cast<std::size_t>(i)] = 0;
            queue.push_back(i);
        }
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors_by_index(u))
                if (dist_to_q[static_cast<std::size_t>(w)] < 0) {
                    dist_to_q[static_cast<std::size_t>(w)] = dist_to_q[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
        }
    }

    void mark_stack() {
        for (int v : stack) marked[static_cast<std::size_t>(v)] = 1;
    }

    // Extends the current path (stack) from vertex u with `depth` edges used.
    void dfs(int u, int depth) {
        for (int w : g.neighbors_by_index(u)) {
            if (in_q[static_cast<std::size_t>(w)]) {
                // Legal endpoint; count each u,v-path once (from its lower
                // endpoint id).
                if (g.id_at(w) > g.id_at(start)) {
                    mark_stack();
                    marked[static_cast<std::size_t>(w)] = 1;
                }
                continue;
            }
            if (on_path[static_cast<std::size_t>(w)]) continue;
            if (depth + 1 + dist_to_q[static_cast<std::size_t>(w)] > h) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            stack.push_back(w);
            dfs(w, depth + 1);
            stack.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    }
};

}  // namespace detail

inline VertexSet q_path_vertices(const Graph& g, const VertexSet& q, int h) {
    if (h < 0) throw std::invalid_argument("q_path_vertices: negative length bound");
    for (VertexId v : q)
        if (!g.has_vertex(v)) throw std::invalid_argument("q_path_vertices: Q vertex not in graph");
    VertexSet out(q);
    if (h == 0 || q.size() < 2) return out;
    detail::QPathSearch search(g, q, h);
    for (VertexId v : q) {
        int i = g.index_of(v);
        search.start = i;
        search.on_path[static_cast<std::size_t>(i)] = 1;
        search.stack.assign(1, i);
        search.dfs(i, 0);
        search.on_path[static_cast<std::size_t>(i)] = 0;
    }
    for (int i = 0; i < g.order(); ++i)
        if (search.marked[static_cast<std::size_t>(i)]) out.insert(g.id_at(i));
    return out;
}

// Iterated path closure of a Voronoi cell's border plus its covering
// vertex: U_0 = border ∪ {v_c}, and U_i is the set of vertices on
// U_{i-1}-paths of length at most 3k. Returns U_0 .. U_k; the chain is
// monotone because of trivial paths.
inline std::vector<VertexSet> compute_u_sets(const Graph& g, const VertexSet& cell,
                                             const VertexSet& border, VertexId v_c, int k) {
    if (k < 0) throw std::invalid_argument("compute_u_sets: negative k");
    if (!g.has_vertex(v_c)) throw std::invalid_argument("compute_u_sets: v_c not in graph");
    for (VertexId v : cell)
        if (!g.has_vertex(v)) throw std::invalid_argument("compute_u_sets: cell vertex not in graph");
    for (VertexId v : border)
        if (!cell.count(v)) throw std::invalid_argument("compute_u_sets: border vertex outside cell");
    std::vector<VertexSet> u_sets;
    u_sets.reserve(static_cast<std::size_t>(k) + 1);
    VertexSet u0(border);
    u0.insert(v_c);
    u_sets.push_back(std::move(u0));
    for (int i = 1; i <= k; ++i)
        u_sets.push_back(q_path_vertices(g, u_sets.back(), 3 * k));
    return u_sets;
}

}  // namespace kdom
