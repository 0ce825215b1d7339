#pragma once

// Immutable simple undirected graph over arbitrary non-negative integer
// vertex ids, plus the distance/ball/component/contraction primitives the
// rest of the library is built on. All operations are pure; Graph is safe
// to share across threads after construction.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kdom {

using VertexId = std::int64_t;
using VertexSet = std::set<VertexId>;
using Edge = std::pair<VertexId, VertexId>;

class Graph {
public:
    Graph() = default;

    // Builds a graph from an explicit vertex set and edge list. Self-loops
    // are rejected, duplicate edges are collapsed, endpoints must be listed
    // vertices, ids must be non-negative.
    static Graph make(const std::vector<VertexId>& vertices, const std::vector<Edge>& edges) {
        Graph g;
        g.vertices_.assign(vertices.begin(), vertices.end());
        std::sort(g.vertices_.begin(), g.vertices_.end());
        g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()), g.vertices_.end());
        if (g.vertices_.size() != vertices.size())
            throw std::invalid_argument("graph: duplicate vertex id");
        if (!g.vertices_.empty() && g.vertices_.front() < 0)
            throw std::invalid_argument("graph: negative vertex id");
        g.index_.reserve(g.vertices_.size());
        for (std::size_t i = 0; i < g.vertices_.size(); ++i)
            g.index_.emplace(g.vertices_[i], static_cast<int>(i));
        std::vector<std::set<int>> adj(g.vertices_.size());
        for (const auto& [u, v] : edges) {
            if (u == v) throw std::invalid_argument("graph: self-loop on vertex " + std::to_string(u));
            auto iu = g.index_.find(u);
            auto iv = g.index_.find(v);
            if (iu == g.index_.end() || iv == g.index_.end())
                throw std::invalid_argument("graph: edge endpoint not in vertex set");
            adj[static_cast<std::size_t>(iu->second)].insert(iv->second);
            adj[static_cast<std::size_t>(iv->second)].insert(iu->second);
        }
        g.adj_idx_.resize(adj.size());
        g.adj_ids_.resize(adj.size());
        for (std::size_t i = 0; i < adj.size(); ++i) {
            g.adj_idx_[i].assign(adj[i].begin(), adj[i].end());
            for (int j : g.adj_idx_[i]) {
                g.adj_ids_[i].push_back(g.vertices_[static_cast<std::size_t>(j)]);
                if (g.vertices_[static_cast<std::size_t>(j)] > g.vertices_[i]) ++g.edge_count_;
            }
        }
        return g;
    }

    int order() const { return static_cast<int>(vertices_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return vertices_.empty(); }

    const std::vector<VertexId>& vertices() const { return vertices_; }

    bool has_vertex(VertexId v) const { return index_.count(v) != 0; }

    bool has_edge(VertexId u, VertexId v) const {
        auto iu = index_.find(u);
        auto iv = index_.find(v);
        if (iu == index_.end() || iv == index_.end()) return false;
        const auto& row = adj_idx_[static_cast<std::size_t>(iu->second)];
        return std::binary_search(row.begin(), row.end(), iv->second);
    }

    // Sorted neighbor ids.
    const std::vector<VertexId>& neighbors(VertexId v) const {
        return adj_ids_[static_cast<std::size_t>(require_index(v))];
    }

    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            for (VertexId w : adj_ids_[i])
                if (w > vertices_[i]) out.emplace_back(vertices_[i], w);
        return out;
    }

    // Index-space accessors for algorithm inner loops.
    int index_of(VertexId v) const { return require_index(v); }
    VertexId id_at(int idx) const { return vertices_[static_cast<std::size_t>(idx)]; }
    const std::vector<int>& neighbors_by_index(int idx) const {
        return adj_idx_[static_cast<std::size_t>(idx)];
    }

    // BFS distances in index space; -1 marks vertices outside the source
    // component.
    std::vector<int> bfs_from_index(int src) const {
        std::vector<int> dist(vertices_.size(), -1);
        std::deque<int> queue;
        dist[static_cast<std::size_t>(src)] = 0;
        queue.push_back(src);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj_idx_[static_cast<std::size_t>(u)])
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }

private:
    int require_index(VertexId v) const {
        auto it = index_.find(v);
        if (it == index_.end())
            throw std::invalid_argument("graph: unknown vertex " + std::to_string(v));
        return it->second;
    }

    std::vector<VertexId> vertices_;                 // sorted
    std::unordered_map<VertexId, int> index_;
    std::vector<std::vector<int>> adj_idx_;          // sorted neighbor indices
    std::vector<std::vector<VertexId>> adj_ids_;     // sorted neighbor ids
    std::size_t edge_count_ = 0;
};

// Exact shortest-path distances from source to every vertex in its
// component. Vertices of other components are absent from the map; there is
// no sentinel distance.
inline std::map<VertexId, int> bfs_distances(const Graph& g, VertexId source) {
    std::vector<int> dist = g.bfs_from_index(g.index_of(source));
    std::map<VertexId, int> out;
    for (std::size_t i = 0; i < dist.size(); ++i)
        if (dist[i] >= 0) out.emplace(g.id_at(static_cast<int>(i)), dist[i]);
    return out;
}

// N^k[v]: all vertices within distance k of v, v included.
inline VertexSet k_ball(const Graph& g, VertexId v, int k) {
    if (k < 0) throw std::invalid_argument("k_ball: negative radius");
    std::vector<int> dist = g.bfs_from_index(g.index_of(v));
    VertexSet ball;
    for (std::size_t i = 0; i < dist.size(); ++i)
        if (dist[i] >= 0 && dist[i] <= k) ball.insert(g.id_at(static_cast<int>(i)));
    return ball;
}

inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (int i = 0; i < g.order(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> dist = g.bfs_from_index(i);
        VertexSet comp;
        for (std::size_t j = 0; j < dist.size(); ++j)
            if (dist[j] >= 0) {
                seen[j] = true;
                comp.insert(g.id_at(static_cast<int>(j)));
            }
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.empty()) return true;
    std::vector<int> dist = g.bfs_from_index(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

// Diameter of a connected graph; nullopt signals a disconnected graph
// (infinite diameter). The empty graph is an input error.
inline std::optional<int> diameter(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("diameter: empty graph");
    int best = 0;
    for (int i = 0; i < g.order(); ++i) {
        std::vector<int> dist = g.bfs_from_index(i);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<VertexId> verts(keep.begin(), keep.end());
    std::vector<Edge> edges;
    for (VertexId v : verts) {
        for (VertexId w : g.neighbors(v))
            if (w > v && keep.count(w)) edges.emplace_back(v, w);
    }
    return Graph::make(verts, edges);
}

// A graph together with the vertex partition it was contracted from. Block
// ids live in the same id space as vertices.
struct QuotientGraph {
    Graph base;
    std::map<VertexId, VertexId> block_of;
    Graph quotient;
};

// Contracts each block to a single vertex, dropping loops and parallel
// edges. Blocks must partition the vertex set and each must induce a
// connected subgraph. Block ids are caller-supplied; the public overload
// uses the minimum member id.
inline QuotientGraph contract_partition(const Graph& g, const std::vector<VertexSet>& blocks,
                                        const std::vector<VertexId>& block_ids) {
    if (blocks.size() != block_ids.size())
        throw std::invalid_argument("contract_partition: block/id count mismatch");
    QuotientGraph q;
    q.base = g;
    std::size_t covered = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("contract_partition: empty block");
        for (VertexId v : blocks[b]) {
            if (!g.has_vertex(v)) throw std::invalid_argument("contract_partition: block vertex not in graph");
            if (!q.block_of.emplace(v, block_ids[b]).second)
                throw std::invalid_argument("contract_partition: blocks overlap");
        }
        covered += blocks[b].size();
        if (!is_connected(induced_subgraph(g, blocks[b])))
            throw std::invalid_argument("contract_partition: disconnected block");
    }
    if (covered != static_cast<std::size_t>(g.order()))
        throw std::invalid_argument("contract_partition: blocks do not cover the vertex set");
    std::set<Edge> qedges;
    for (const auto& [u, v] : g.edges()) {
        VertexId bu = q.block_of.at(u);
        VertexId bv = q.block_of.at(v);
        if (bu != bv) qedges.emplace(std::min(bu, bv), std::max(bu, bv));
    }
    q.quotient = Graph::make(block_ids, std::vector<Edge>(qedges.begin(), qedges.end()));
    return q;
}

inline QuotientGraph contract_partition(const Graph& g, const std::vector<VertexSet>& blocks) {
    std::vector<VertexId> ids;
    ids.reserve(blocks.size());
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("contract_partition: empty block");
        ids.push_back(*b.begin());
    }
    return contract_partition(g, blocks, ids);
}

}  // namespace kdom
