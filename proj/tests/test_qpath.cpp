#include <catch2/catch_amalgamated.hpp>

#include "kdom/generators.hpp"
#include "kdom/qpath.hpp"
#include "kdom/structural.hpp"
#include "support/naive.hpp"

using namespace kdom;
using kdom::testing::cycle_graph;
using kdom::testing::naive_q_path_vertices;
using kdom::testing::path_graph;

TEST_CASE("q_path_vertices fixtures") {
    Graph p5 = path_graph(5);

    // h = 0 keeps exactly Q.
    CHECK(q_path_vertices(p5, {0, 2, 4}, 0) == VertexSet{0, 2, 4});

    // The whole path is a Q-path at h = 4; at h = 3 only the trivial paths
    // survive since the unique 0,4-path has length 4.
    CHECK(q_path_vertices(p5, {0, 4}, 4) == VertexSet{0, 1, 2, 3, 4});
    CHECK(q_path_vertices(p5, {0, 4}, 3) == VertexSet{0, 4});

    // Both arcs of C_8 between antipodal vertices have length 4.
    Graph c8 = cycle_graph(8);
    VertexSet everything{0, 1, 2, 3, 4, 5, 6, 7};
    CHECK(q_path_vertices(c8, {0, 4}, 4) == everything);
    CHECK(naive_q_path_vertices(c8, {0, 4}, 4) == everything);

    CHECK_THROWS_AS(q_path_vertices(p5, {0, 9}, 2), std::invalid_argument);
    CHECK_THROWS_AS(q_path_vertices(p5, {0}, -1), std::invalid_argument);
}

TEST_CASE("interior vertices of Q block longer paths") {
    // 1,5-paths through 3 are not Q-paths when 3 is in Q.
    Graph p5 = path_graph(5);
    CHECK(q_path_vertices(p5, {0, 2, 4}, 4) == VertexSet{0, 1, 2, 3, 4});
    CHECK(q_path_vertices(p5, {0, 2}, 4) == VertexSet{0, 1, 2});
}

TEST_CASE("q_path_vertices agrees with exhaustive enumeration") {
    SplitMix64 rng(99);
    for (Family f : {Family::path, Family::cycle, Family::random_tree,
                     Family::maximal_outerplanar, Family::cactus, Family::fan}) {
        for (std::uint64_t seed : {1ull, 2ull}) {
            Graph g = generate({f, 12, seed});
            for (std::size_t qs : {1u, 2u, 3u, 4u}) {
                VertexSet q;
                while (q.size() < qs)
                    q.insert(g.id_at(static_cast<int>(rng.below(static_cast<std::uint64_t>(g.order())))));
                for (int h : {0, 1, 2, 3, 5}) {
                    CAPTURE(family_name(f), seed, h);
                    CHECK(q_path_vertices(g, q, h) == naive_q_path_vertices(g, q, h));
                }
            }
        }
    }
}

TEST_CASE("q_path_vertices monotone in h and contains Q") {
    SplitMix64 rng(7);
    Graph g = generate({Family::maximal_outerplanar, 14, 4});
    for (int trial = 0; trial < 10; ++trial) {
        VertexSet q;
        while (q.size() < 3)
            q.insert(g.id_at(static_cast<int>(rng.below(static_cast<std::uint64_t>(g.order())))));
        VertexSet prev;
        for (int h = 0; h <= 6; ++h) {
            VertexSet now = q_path_vertices(g, q, h);
            CHECK(std::includes(now.begin(), now.end(), q.begin(), q.end()));
            CHECK(std::includes(now.begin(), now.end(), prev.begin(), prev.end()));
            prev = std::move(now);
        }
    }
}

TEST_CASE("path-closure bound holds on certified instances") {
    SplitMix64 rng(5);
    for (Family f : {Family::path, Family::cycle, Family::random_tree,
                     Family::maximal_outerplanar, Family::cactus, Family::fan}) {
        int t = family_t(f);
        Graph g = generate({f, 14, 8});
        for (std::size_t qs : {1u, 2u, 4u}) {
            VertexSet q;
            while (q.size() < qs)
                q.insert(g.id_at(static_cast<int>(rng.below(static_cast<std::uint64_t>(g.order())))));
            for (int h : {0, 2, 4, 6}) {
                VertexSet qh = q_path_vertices(g, q, h);
                long double bound = log10_alpha(h, t) +
                                    std::log10(static_cast<long double>(q.size()));
                CHECK(within_log10_bound(static_cast<long double>(qh.size()), bound));
            }
        }
    }
}

TEST_CASE("compute_u_sets fixtures") {
    Graph p3 = path_graph(3);
    auto u = compute_u_sets(p3, {0, 1, 2}, {0, 2}, 1, 1);
    REQUIRE(u.size() == 2);
    CHECK(u[0] == VertexSet{0, 1, 2});
    CHECK(u[1] == VertexSet{0, 1, 2});

    // Empty border: U_0 is just the covering vertex.
    Graph c8 = cycle_graph(8);
    auto solo = compute_u_sets(c8, {3}, {}, 3, 2);
    REQUIRE(solo.size() == 3);
    CHECK(solo[0] == VertexSet{3});
    for (const auto& level : solo) CHECK(level.count(3));

    // 0 and 4 are antipodal in C_8: no 0,4-path of length <= 3 exists, so
    // U_1 stays {0,4}; confirmed against the exhaustive enumerator.
    auto antipodal = compute_u_sets(c8, {0, 1, 2, 3, 4, 5, 6, 7}, {0}, 4, 1);
    REQUIRE(antipodal.size() == 2);
    CHECK(antipodal[0] == VertexSet{0, 4});
    CHECK(antipodal[1] == naive_q_path_vertices(c8, {0, 4}, 3));
    CHECK(antipodal[1] == VertexSet{0, 4});
}

TEST_CASE("compute_u_sets chain is monotone") {
    Graph g = generate({Family::maximal_outerplanar, 12, 2});
    VertexSet cell(g.vertices().begin(), g.vertices().end());
    auto u = compute_u_sets(g, cell, {3, 5}, 1, 2);
    REQUIRE(u.size() == 3);
    for (std::size_t i = 1; i < u.size(); ++i)
        CHECK(std::includes(u[i].begin(), u[i].end(), u[i - 1].begin(), u[i - 1].end()));
}
