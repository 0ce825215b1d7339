#pragma once

// Seeded generators for the K_{2,t}-minor-free graph families used across
// the test and experiment suites. Output depends only on the spec: the
// generator runs on a fixed splitmix64 stream, so every platform reproduces
// identical graphs. Vertex ids are 1..n in construction order.

#include <cstdint>
#include <string>

#include "kdom/graph.hpp"

namespace kdom {

// splitmix64 (Steele, Lea, Flood): state advances by the golden-gamma
// increment and the output is finalized with two xor-shift-multiply rounds.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough draw in [0, bound); bound is tiny next to 2^64 at the
    // sizes this library generates, so plain reduction is used.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

enum class Family { path, cycle, star, random_tree, maximal_outerplanar, cactus, fan };

struct GeneratorSpec {
    Family family;
    int n;
    std::uint64_t seed;
};

inline std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::random_tree: return "random-tree";
        case Family::maximal_outerplanar: return "maximal-outerplanar";
        case Family::cactus: return "cactus";
        case Family::fan: return "fan";
    }
    throw std::invalid_argument("unknown family");
}

inline Family family_from_name(const std::string& name) {
    for (Family f : {Family::path, Family::cycle, Family::star, Family::random_tree,
                     Family::maximal_outerplanar, Family::cactus, Family::fan})
        if (family_name(f) == name) return f;
    throw std::invalid_argument("unknown family: " + name);
}

// Smallest t for which the family is guaranteed K_{2,t}-minor-free: 2 for
// trees, 3 for the outerplanar-like families.
inline int family_t(Family f) {
    switch (f) {
        case Family::path:
        case Family::star:
        case Family::random_tree:
            return 2;
        default:
            return 3;
    }
}

namespace detail {

inline std::vector<VertexId> id_range(int n) {
    std::vector<VertexId> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return v;
}

// Triangulates the n-gon on vertices 1..n by a random ear sequence:
// repeatedly cut a uniformly chosen vertex of the current polygon as an ear,
// chording its two neighbors.
inline void triangulate_polygon(int n, SplitMix64& rng, std::vector<Edge>& edges) {
    std::vector<VertexId> poly;
    for (VertexId i = 1; i <= n; ++i) poly.push_back(i);
    while (poly.size() > 3) {
        std::size_t pos = rng.below(poly.size());
        VertexId a = poly[(pos + poly.size() - 1) % poly.size()];
        VertexId b = poly[(pos + 1) % poly.size()];
        edges.emplace_back(std::min(a, b), std::max(a, b));
        poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(pos));
    }
}

}  // namespace detail

inline Graph generate(const GeneratorSpec& spec) {
    const int n = spec.n;
    if (n < 1) throw std::invalid_argument("generate: n must be positive");
    SplitMix64 rng(spec.seed);
    std::vector<Edge> edges;
    switch (spec.family) {
        case Family::path:
            for (VertexId i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case Family::cycle:
            if (n < 3) throw std::invalid_argument("generate: cycle needs n >= 3");
            for (VertexId i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(1, n);
            break;
        case Family::star:
            for (VertexId i = 2; i <= n; ++i) edges.emplace_back(1, i);
            break;
        case Family::random_tree:
            for (VertexId i = 2; i <= n; ++i)
                edges.emplace_back(1 + static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(i - 1))), i);
            break;
        case Family::maximal_outerplanar: {
            for (VertexId i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
            if (n >= 3) {
                edges.emplace_back(1, n);
                detail::triangulate_polygon(n, rng, edges);
            }
            break;
        }
        case Family::cactus: {
            VertexId next = 2;
            while (next <= n) {
                VertexId attach = 1 + static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(next - 1)));
                VertexId remaining = n - next + 1;
                bool cycle = remaining >= 2 && rng.below(2) == 0;
                if (!cycle) {
                    edges.emplace_back(attach, next);
                    ++next;
                } else {
                    // Cycle through `attach` using c new vertices, c in 2..4.
                    VertexId c = 2 + static_cast<VertexId>(rng.below(3));
                    c = std::min(c, remaining);
                    edges.emplace_back(attach, next);
                    for (VertexId i = 0; i + 1 < c; ++i) edges.emplace_back(next + i, next + i + 1);
                    edges.emplace_back(next + c - 1, attach);
                    next += c;
                }
            }
            break;
        }
        case Family::fan:
            for (VertexId i = 1; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            for (VertexId i = 1; i < n; ++i) edges.emplace_back(i, n);
            break;
    }
    return Graph::make(detail::id_range(n), edges);
}

// Precondition gate for the constant-factor guarantee: diam(g) >= 4k.
inline bool diameter_gate(const Graph& g, int k) {
    auto d = diameter(g);
    if (!d) throw std::invalid_argument("diameter_gate: disconnected graph");
    return *d >= 4 * k;
}

}  // namespace kdom
