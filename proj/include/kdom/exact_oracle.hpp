#pragma once

// Ground-truth engines: exact minimum distance-k domination via
// branch-and-bound set cover, domination checking, and brute-force
// K_{2,t}-minor detection. Everything is deterministic and self-contained;
// exceeding a search budget raises BudgetExceeded rather than returning a
// wrong answer.

#include <bit>
#include <numeric>

#include "kdom/graph.hpp"

namespace kdom {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_distance_k_dominating(const Graph& g, const VertexSet& d, int k) {
    if (k < 0) throw std::invalid_argument("is_distance_k_dominating: negative k");
    for (VertexId v : d)
        if (!g.has_vertex(v)) throw std::invalid_argument("is_distance_k_dominating: vertex not in graph");
    if (g.order() == 0) return true;
    if (d.empty()) return false;
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::deque<int> queue;
    for (VertexId v : d) {
        dist[static_cast<std::size_t>(g.index_of(v))] = 0;
        queue.push_back(g.index_of(v));
    }
    int covered = static_cast<int>(d.size());
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[static_cast<std::size_t>(u)] == k) continue;
        for (int w : g.neighbors_by_index(u))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                ++covered;
                queue.push_back(w);
            }
    }
    return covered == g.order();
}

namespace detail {

// Fixed-width dynamic bitset used by the set-cover search.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t nbits = 0) : w((nbits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
    bool none() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    int count_and(const Bits& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w.size(); ++i) c += std::popcount(w[i] & o.w[i]);
        return c;
    }
    void subtract(const Bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
    }
    int lowest() const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w[i])));
        return -1;
    }
};

// Deterministic branch-and-bound minimum set cover. Branching element is
// the lowest-index uncovered element; candidates covering it are tried by
// descending fresh coverage, then ascending key. The lower bound is
// ceil(uncovered / best remaining set size).
class SetCoverSolver {
public:
    SetCoverSolver(std::size_t universe, std::vector<Bits> sets, std::vector<VertexId> keys)
        : universe_(universe), sets_(std::move(sets)), keys_(std::move(keys)) {
        order_.resize(sets_.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(),
                  [&](int a, int b) { return keys_[static_cast<std::size_t>(a)] < keys_[static_cast<std::size_t>(b)]; });
        covers_.resize(universe_);
        for (std::size_t s = 0; s < sets_.size(); ++s)
            for (std::size_t e = 0; e < universe_; ++e)
                if (sets_[s].test(e)) covers_[e].push_back(static_cast<int>(s));
    }

    long long nodes_explored() const { return nodes_; }

    // Minimum number of sets covering the whole universe, with one optimal
    // selection (set indices). Throws BudgetExceeded past node_budget.
    std::pair<int, std::vector<int>> solve(long long node_budget) {
        budget_ = node_budget;
        Bits uncovered(universe_);
        for (std::size_t e = 0; e < universe_; ++e) {
            if (covers_[e].empty()) throw std::invalid_argument("set cover: uncoverable element");
            uncovered.set(e);
        }
        best_ = greedy(uncovered);
        std::vector<int> chosen;
        dfs(uncovered, chosen, std::nullopt);
        return {static_cast<int>(best_.size()), best_};
    }

    // Whether the universe minus `preset` coverage admits a cover using at
    // most `extra_limit` further sets.
    bool coverable_within(const std::vector<int>& preset, int extra_limit, long long node_budget) {
        budget_ = node_budget;
        Bits uncovered(universe_);
        for (std::size_t e = 0; e < universe_; ++e) uncovered.set(e);
        for (int s : preset) uncovered.subtract(sets_[static_cast<std::size_t>(s)]);
        std::vector<int> chosen;
        found_ = false;
        dfs(uncovered, chosen, extra_limit);
        return found_;
    }

    // Lexicographically smallest optimal cover, as sorted keys.
    std::vector<VertexId> lex_min_optimal(long long node_budget) {
        auto [size, any] = solve(node_budget);
        (void)any;
        std::vector<int> fixed;
        Bits uncovered(universe_);
        for (std::size_t e = 0; e < universe_; ++e) uncovered.set(e);
        for (int oi : order_) {
            if (static_cast<int>(fixed.size()) == size) break;
            if (uncovered.none()) break;
            fixed.push_back(oi);
            if (coverable_within(fixed, size - static_cast<int>(fixed.size()), node_budget)) {
                uncovered.subtract(sets_[static_cast<std::size_t>(oi)]);
            } else {
                fixed.pop_back();
            }
        }
        std::vector<VertexId> out;
        out.reserve(fixed.size());
        for (int s : fixed) out.push_back(keys_[static_cast<std::size_t>(s)]);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::vector<int> greedy(Bits uncovered) const {
        std::vector<int> picked;
        while (!uncovered.none()) {
            int best_set = -1, best_cov = 0;
            for (int oi : order_) {
                int cov = sets_[static_cast<std::size_t>(oi)].count_and(uncovered);
                if (cov > best_cov) {
                    best_cov = cov;
                    best_set = oi;
                }
            }
            picked.push_back(best_set);
            uncovered.subtract(sets_[static_cast<std::size_t>(best_set)]);
        }
        return picked;
    }

    // When `limit` is set, searches for any cover of size <= limit; otherwise
    // improves best_ to an optimal cover.
    void dfs(const Bits& uncovered, std::vector<int>& chosen, std::optional<int> limit) {
        if (limit && found_) return;
        if (++nodes_ > budget_) throw BudgetExceeded("set cover: node budget exceeded");
        if (uncovered.none()) {
            if (limit) {
                found_ = true;
            } else if (chosen.size() < best_.size()) {
                best_ = chosen;
            }
            return;
        }
        std::size_t cap = limit ? static_cast<std::size_t>(*limit) : best_.size() - 1;
        if (chosen.size() >= cap) return;
        int max_cov = 0;
        for (std::size_t s = 0; s < sets_.size(); ++s)
            max_cov = std::max(max_cov, sets_[s].count_and(uncovered));
        std::size_t lower = chosen.size() +
                            static_cast<std::size_t>((uncovered.count() + max_cov - 1) / max_cov);
        if (lower > cap) return;
        int e = uncovered.lowest();
        std::vector<int> cands = covers_[static_cast<std::size_t>(e)];
        std::vector<int> fresh(cands.size());
        for (std::size_t i = 0; i < cands.size(); ++i)
            fresh[i] = sets_[static_cast<std::size_t>(cands[i])].count_and(uncovered);
        std::vector<std::size_t> ord(cands.size());
        std::iota(ord.begin(), ord.end(), 0);
        std::sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
            if (fresh[a] != fresh[b]) return fresh[a] > fresh[b];
            return keys_[static_cast<std::size_t>(cands[a])] < keys_[static_cast<std::size_t>(cands[b])];
        });
        for (std::size_t i : ord) {
            Bits next = uncovered;
            next.subtract(sets_[static_cast<std::size_t>(cands[i])]);
            chosen.push_back(cands[i]);
            dfs(next, chosen, limit);
            chosen.pop_back();
            if (limit && found_) return;
        }
    }

    std::size_t universe_;
    std::vector<Bits> sets_;
    std::vector<VertexId> keys_;
    std::vector<int> order_;                 // set indices by ascending key
    std::vector<std::vector<int>> covers_;   // element -> covering sets
    std::vector<int> best_;
    bool found_ = false;
    long long nodes_ = 0;
    long long budget_ = 0;
};

// Builds the distance-k cover instance for `block`: one candidate set per
// member vertex covering the block vertices within distance k in g, with
// anchor-covered vertices removed from the universe.
inline SetCoverSolver make_domination_cover(const Graph& g, const std::vector<VertexId>& block,
                                            const VertexSet& anchors, int k,
                                            std::vector<VertexId>* universe_out = nullptr) {
    std::vector<char> anchored(block.size(), 0);
    if (!anchors.empty()) {
        std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
        std::deque<int> queue;
        for (VertexId a : anchors) {
            int i = g.index_of(a);
            if (dist[static_cast<std::size_t>(i)] < 0) {
                dist[static_cast<std::size_t>(i)] = 0;
                queue.push_back(i);
            }
        }
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (dist[static_cast<std::size_t>(u)] == k) continue;
            for (int w : g.neighbors_by_index(u))
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
        }
        for (std::size_t i = 0; i < block.size(); ++i) {
            int d = dist[static_cast<std::size_t>(g.index_of(block[i]))];
            anchored[i] = d >= 0 && d <= k;
        }
    }
    std::vector<std::size_t> universe_slot(block.size(), SIZE_MAX);
    std::size_t universe = 0;
    for (std::size_t i = 0; i < block.size(); ++i)
        if (!anchored[i]) universe_slot[i] = universe++;
    if (universe_out) {
        universe_out->clear();
        for (std::size_t i = 0; i < block.size(); ++i)
            if (!anchored[i]) universe_out->push_back(block[i]);
    }
    std::map<VertexId, std::size_t> block_pos;
    for (std::size_t i = 0; i < block.size(); ++i) block_pos.emplace(block[i], i);
    std::vector<Bits> sets;
    sets.reserve(block.size());
    for (VertexId c : block) {
        Bits covered(universe);
        std::vector<int> dist = g.bfs_from_index(g.index_of(c));
        for (const auto& [v, pos] : block_pos) {
            int d = dist[static_cast<std::size_t>(g.index_of(v))];
            if (d >= 0 && d <= k && universe_slot[pos] != SIZE_MAX) covered.set(universe_slot[pos]);
        }
        sets.push_back(std::move(covered));
    }
    return SetCoverSolver(universe, std::move(sets), block);
}

}  // namespace detail

struct OptimalCertificate {
    VertexSet optimum;
    std::size_t size = 0;
    long long nodes_explored = 0;
};

// Exact gamma_k via branch-and-bound set cover, solved per component.
inline OptimalCertificate gamma_k_exact(const Graph& g, int k, long long node_budget = 20'000'000) {
    if (g.order() == 0) throw std::invalid_argument("gamma_k_exact: empty graph");
    if (k < 0) throw std::invalid_argument("gamma_k_exact: negative k");
    OptimalCertificate cert;
    for (const VertexSet& comp : components(g)) {
        std::vector<VertexId> block(comp.begin(), comp.end());
        auto solver = detail::make_domination_cover(g, block, {}, k);
        auto [size, chosen] = solver.solve(node_budget);
        (void)size;
        for (int s : chosen) cert.optimum.insert(block[static_cast<std::size_t>(s)]);
        cert.nodes_explored += solver.nodes_explored();
    }
    cert.size = cert.optimum.size();
    return cert;
}

namespace detail {

// Unit-vertex-capacity max flow between two vertex groups inside the masked
// subgraph; returns as soon as `target` disjoint paths exist. Nodes are
// split into in/out halves over a dense residual matrix (n <= 20).
inline int disjoint_connector_count(const std::vector<std::uint32_t>& adj, std::uint32_t region,
                                    std::uint32_t sources, std::uint32_t sinks, int n, int target) {
    const int nodes = 2 * n + 2;
    const int src = 2 * n, snk = 2 * n + 1;
    std::vector<std::vector<signed char>> cap(static_cast<std::size_t>(nodes),
                                              std::vector<signed char>(static_cast<std::size_t>(nodes), 0));
    auto in = [](int v) { return 2 * v; };
    auto out = [](int v) { return 2 * v + 1; };
    for (int v = 0; v < n; ++v) {
        if (!((region >> v) & 1)) continue;
        cap[static_cast<std::size_t>(in(v))][static_cast<std::size_t>(out(v))] = 1;
        if ((sources >> v) & 1) cap[static_cast<std::size_t>(src)][static_cast<std::size_t>(in(v))] = 1;
        if ((sinks >> v) & 1) cap[static_cast<std::size_t>(out(v))][static_cast<std::size_t>(snk)] = 1;
        std::uint32_t nb = adj[static_cast<std::size_t>(v)] & region;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            cap[static_cast<std::size_t>(out(v))][static_cast<std::size_t>(in(w))] = 1;
        }
    }
    int flow = 0;
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    while (flow < target) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[static_cast<std::size_t>(src)] = src;
        std::deque<int> queue{src};
        while (!queue.empty() && parent[static_cast<std::size_t>(snk)] < 0) {
            int u = queue.front();
            queue.pop_front();
            for (int w = 0; w < nodes; ++w)
                if (cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] > 0 &&
                    parent[static_cast<std::size_t>(w)] < 0) {
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                }
        }
        if (parent[static_cast<std::size_t>(snk)] < 0) break;
        for (int v = snk; v != src; v = parent[static_cast<std::size_t>(v)]) {
            int u = parent[static_cast<std::size_t>(v)];
            --cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            ++cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
        }
        ++flow;
    }
    return flow;
}

}  // namespace detail

// Exhaustive K_{2,t}-minor detection. Enumerates the two hub branch sets as
// disjoint connected vertex masks (lowest member of the first below the
// second's, since hubs are interchangeable) and packs the t connector
// branch sets as vertex-disjoint paths between the hubs' neighborhoods,
// which is exact by Menger's theorem. Intended for n <= ~16; larger inputs
// or too many hub pairs raise BudgetExceeded.
inline bool has_k2t_minor(const Graph& g, int t, long long pair_budget = 500'000'000) {
    if (t < 2) throw std::invalid_argument("has_k2t_minor: t must be at least 2");
    const int n = g.order();
    if (n > 20) throw BudgetExceeded("has_k2t_minor: graph too large for exhaustive search");
    if (n < t + 2) return false;
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors_by_index(v)) adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << w;
    const std::uint32_t full = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;
    // Connectivity of every vertex subset, by BFS within the mask.
    std::vector<char> conn(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int start = std::countr_zero(mask);
        std::uint32_t seen = std::uint32_t{1} << start;
        std::uint32_t frontier = seen;
        while (frontier) {
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[static_cast<std::size_t>(v)] & mask & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        conn[mask] = seen == mask;
    }
    long long pairs = 0;
    for (std::uint32_t a = 1; a <= full; ++a) {
        if (!conn[a]) continue;
        if (n - std::popcount(a) < t + 1) continue;
        std::uint32_t nbr_a = 0;
        std::uint32_t bits = a;
        while (bits) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            nbr_a |= adj[static_cast<std::size_t>(v)];
        }
        // Second hub drawn above the first hub's lowest vertex.
        std::uint32_t pool = full & ~a & ~((std::uint32_t{2} << std::countr_zero(a)) - 1);
        for (std::uint32_t b = pool; b; b = (b - 1) & pool) {
            if (!conn[b]) continue;
            if (++pairs > pair_budget) throw BudgetExceeded("has_k2t_minor: pair budget exceeded");
            std::uint32_t region = full & ~a & ~b;
            if (std::popcount(region) < t) continue;
            std::uint32_t sources = nbr_a & region;
            if (std::popcount(sources) < t) continue;
            std::uint32_t nbr_b = 0;
            bits = b;
            while (bits) {
                int v = std::countr_zero(bits);
                bits &= bits - 1;
                nbr_b |= adj[static_cast<std::size_t>(v)];
            }
            std::uint32_t sinks = nbr_b & region;
            if (std::popcount(sinks) < t) continue;
            if (detail::disjoint_connector_count(adj, region, sources, sinks, n, t) >= t) return true;
        }
    }
    return false;
}

}  // namespace kdom
