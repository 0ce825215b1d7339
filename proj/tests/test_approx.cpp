#include <catch2/catch_amalgamated.hpp>

#include "kdom/approx.hpp"
#include "kdom/generators.hpp"
#include "support/naive.hpp"

using namespace kdom;
using kdom::testing::cycle_graph;
using kdom::testing::path_graph;

namespace {

// Exhaustive lexicographically-smallest minimum anchored cover, for
// cross-checking solve_block_exact on small blocks.
std::optional<VertexSet> brute_lex_min_cover(const Graph& g, const VertexSet& block,
                                             const VertexSet& anchors, int k) {
    std::vector<VertexId> members(block.begin(), block.end());
    const std::size_t n = members.size();
    std::optional<VertexSet> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet candidate(anchors);
        VertexSet picked;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) {
                candidate.insert(members[i]);
                picked.insert(members[i]);
            }
        bool covers = true;
        for (VertexId v : block) {
            auto dist = bfs_distances(g, v);
            bool hit = false;
            for (VertexId c : candidate)
                if (dist.count(c) && dist.at(c) <= k) hit = true;
            if (!hit) covers = false;
        }
        if (!covers) continue;
        if (!best || picked.size() < best->size() ||
            (picked.size() == best->size() &&
             std::lexicographical_compare(picked.begin(), picked.end(), best->begin(),
                                          best->end())))
            best = picked;
    }
    return best;
}

}  // namespace

TEST_CASE("lift_partition fixtures") {
    Graph p5 = generate({Family::path, 5, 1});
    VoronoiPartition cells = build_voronoi(p5, {1, 5}, 2);

    ClusterPartition single;
    single.blocks = {{1, 5}};
    LiftedPartition whole = lift_partition(p5, cells, single);
    REQUIRE(whole.blocks.size() == 1);
    CHECK(whole.blocks[0] == VertexSet{1, 2, 3, 4, 5});
    CHECK(whole.boundary.empty());

    ClusterPartition split;
    split.blocks = {{1}, {5}};
    LiftedPartition lifted = lift_partition(p5, cells, split);
    REQUIRE(lifted.blocks.size() == 2);
    CHECK(lifted.blocks[0] == VertexSet{1, 2});
    CHECK(lifted.blocks[1] == VertexSet{3, 4, 5});
    CHECK(lifted.boundary == VertexSet{2, 3});

    ClusterPartition bogus;
    bogus.blocks = {{1}};
    CHECK_THROWS_AS(lift_partition(p5, cells, bogus), std::invalid_argument);
    ClusterPartition wrong;
    wrong.blocks = {{1}, {3}};
    CHECK_THROWS_AS(lift_partition(p5, cells, wrong), std::invalid_argument);
}

TEST_CASE("singleton cells and blocks make every non-isolated vertex boundary") {
    Graph c5 = cycle_graph(5);
    VertexSet all(c5.vertices().begin(), c5.vertices().end());
    VoronoiPartition cells = build_voronoi(c5, all, 0);
    ClusterPartition singletons;
    for (VertexId v : c5.vertices()) singletons.blocks.push_back({v});
    LiftedPartition lifted = lift_partition(c5, cells, singletons);
    CHECK(lifted.boundary == all);
}

TEST_CASE("solve_block_exact fixtures") {
    Graph p5 = generate({Family::path, 5, 1});

    // Everything already anchored.
    CHECK(solve_block_exact(p5, {1, 2, 3}, {2}, 2).empty());

    // Whole path, no anchors: the middle vertex.
    CHECK(solve_block_exact(p5, {1, 2, 3, 4, 5}, {}, 2) == VertexSet{3});

    // Tail block anchored at 3, k=1: {4} and {5} both finish the job; the
    // lexicographically smaller set wins.
    CHECK(solve_block_exact(p5, {3, 4, 5}, {3}, 1) == VertexSet{4});

    CHECK_THROWS_AS(solve_block_exact(p5, {}, {}, 2), std::invalid_argument);
    CHECK_THROWS_AS(solve_block_exact(p5, {9}, {}, 2), std::invalid_argument);
}

TEST_CASE("solve_block_exact distances go through the whole graph") {
    // Block {0,4} of C_5: the outside path keeps them within distance 1 of
    // each other's side, so one anchor-free pick covers both at k=2.
    Graph c5 = cycle_graph(5);
    VertexSet q = solve_block_exact(c5, {0, 4}, {}, 2);
    CHECK(q.size() == 1);
}

TEST_CASE("solve_block_exact equals the exhaustive lex-min cover") {
    SplitMix64 rng(17);
    for (Family f : {Family::path, Family::cycle, Family::random_tree,
                     Family::maximal_outerplanar, Family::cactus}) {
        Graph g = generate({f, 12, 3});
        for (int trial = 0; trial < 4; ++trial) {
            VertexSet block;
            while (block.size() < 6)
                block.insert(g.id_at(static_cast<int>(rng.below(static_cast<std::uint64_t>(g.order())))));
            VertexSet anchors;
            if (trial % 2) anchors.insert(*block.begin());
            for (int k : {1, 2}) {
                CAPTURE(family_name(f), trial, k);
                VertexSet got = solve_block_exact(g, block, anchors, k);
                auto expect = brute_lex_min_cover(g, block, anchors, k);
                REQUIRE(expect.has_value());
                CHECK(got == *expect);
            }
        }
    }
}

TEST_CASE("derived-mode epsilon collapses P_20 to one exactly-solved block") {
    Graph p20 = generate({Family::path, 20, 1});
    ApproxRun run = k_domset_approx(p20, 2, 3, 0.5, EpsilonMode::derived);
    CHECK(run.audit.single_block);
    CHECK(run.boundary.empty());
    CHECK(run.result.size() == 4);  // ceil(20/5)
    CHECK(run.audit.valid);
}

TEST_CASE("direct-mode runs satisfy the audit inequality on the suite") {
    for (Family f : {Family::path, Family::cycle, Family::random_tree,
                     Family::maximal_outerplanar, Family::cactus}) {
        for (double epsilon : {0.1, 0.3}) {
            Graph g = generate({f, 30, 5});
            int k = 2;
            if (!diameter_gate(g, k)) continue;
            CAPTURE(family_name(f), epsilon);
            ApproxRun run = k_domset_approx(g, k, family_t(f), epsilon, EpsilonMode::direct);
            CHECK(run.audit.valid);
            CHECK(is_distance_k_dominating(g, run.result, k));
            std::size_t gamma = gamma_k_exact(g, k).size;
            CHECK(run.result.size() <= run.boundary.size() + gamma);
            CHECK(run.audit.boundary_edge_product_ok);
            // Q = boundary ∪ block solutions, exactly.
            VertexSet rebuilt(run.boundary);
            for (const auto& q_i : run.block_solutions) rebuilt.insert(q_i.begin(), q_i.end());
            CHECK(rebuilt == run.result);
            if (run.audit.single_block) CHECK(run.result.size() == gamma);
        }
    }
}

TEST_CASE("outerplanar pipeline run honors the audit inequality") {
    Graph g = generate({Family::maximal_outerplanar, 30, 2});  // diameter 8
    REQUIRE(diameter_gate(g, 2));
    ApproxRun run = k_domset_approx(g, 2, 3, 0.2, EpsilonMode::direct);
    CHECK(run.audit.valid);
    std::size_t gamma = gamma_k_exact(g, 2).size;
    CHECK(run.result.size() <= run.boundary.size() + gamma);
}

TEST_CASE("per-block solutions are minimal") {
    // No subset one smaller than Q_i can anchor-cover its block.
    Graph g = generate({Family::cactus, 24, 8});  // diameter 9
    ApproxRun run = k_domset_approx(g, 2, 3, 0.3, EpsilonMode::direct);
    for (std::size_t i = 0; i < run.blocks.size(); ++i) {
        const VertexSet& block = run.blocks[i];
        const VertexSet& q_i = run.block_solutions[i];
        if (block.size() > 20 || q_i.empty()) continue;
        VertexSet anchors;
        for (VertexId v : block)
            if (run.boundary.count(v)) anchors.insert(v);
        auto covers = [&](const VertexSet& picked) {
            VertexSet d(anchors);
            d.insert(picked.begin(), picked.end());
            for (VertexId v : block) {
                auto dist = bfs_distances(g, v);
                bool hit = false;
                for (VertexId c : d)
                    if (dist.count(c) && dist.at(c) <= 2) hit = true;
                if (!hit) return false;
            }
            return true;
        };
        CHECK(covers(q_i));
        std::vector<VertexId> members(block.begin(), block.end());
        std::size_t want = q_i.size() - 1;
        std::vector<std::size_t> pick(want);
        std::iota(pick.begin(), pick.end(), 0);
        bool any_smaller = false;
        if (want > 0 && members.size() >= want) {
            while (true) {
                VertexSet candidate;
                for (std::size_t p : pick) candidate.insert(members[p]);
                if (covers(candidate)) {
                    any_smaller = true;
                    break;
                }
                std::size_t j = want;
                while (j > 0 && pick[j - 1] == members.size() - want + (j - 1)) --j;
                if (j == 0) break;
                ++pick[j - 1];
                for (std::size_t l = j; l < want; ++l) pick[l] = pick[l - 1] + 1;
            }
        } else if (want == 0) {
            any_smaller = covers({});
        }
        CHECK(!any_smaller);
    }
}

TEST_CASE("pipeline preconditions") {
    Graph p20 = generate({Family::path, 20, 1});
    CHECK_THROWS_AS(k_domset_approx(p20, 0, 3, 0.2, EpsilonMode::direct), std::invalid_argument);
    CHECK_THROWS_AS(k_domset_approx(p20, 2, 1, 0.2, EpsilonMode::direct), std::invalid_argument);
    CHECK_THROWS_AS(k_domset_approx(p20, 2, 3, 0.0, EpsilonMode::direct), std::invalid_argument);
    CHECK_THROWS_AS(k_domset_approx(p20, 5, 3, 0.2, EpsilonMode::direct),
                    std::invalid_argument);  // diameter 19 < 20
    Graph split = Graph::make({0, 1, 2, 3}, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(k_domset_approx(split, 1, 3, 0.2, EpsilonMode::direct),
                    std::invalid_argument);
}

TEST_CASE("bounded-degree variant on the star returns the center") {
    Graph star = generate({Family::star, 12, 1});
    for (int k : {1, 2, 3}) {
        ApproxRun run = bounded_degree_approx(star, k, 3, bounded_degree_c(11, k), 0.3,
                                              EpsilonMode::direct);
        CHECK(run.result == VertexSet{1});
        CHECK(run.audit.valid);
        CHECK(run.audit.transfer_ok);
    }
}

TEST_CASE("bounded-degree variant audit on low-degree instances") {
    for (Family f : {Family::path, Family::cycle}) {
        for (int k : {2, 3}) {
            Graph g = generate({f, 30, 2});
            double c_bound = bounded_degree_c(3, k);  // degree-2 graphs use L = 3
            CAPTURE(family_name(f), k);
            ApproxRun run = bounded_degree_approx(g, k, 3, c_bound, 0.2, EpsilonMode::direct);
            CHECK(run.audit.valid);
            CHECK(run.audit.transfer_ok);
            std::size_t gamma = gamma_k_exact(g, k).size;
            CHECK(run.result.size() <= run.border_centers.size() + gamma);
            // Post-hoc boundedness: gamma_1 <= C gamma_k.
            std::size_t gamma1 = gamma_k_exact(g, 1).size;
            CHECK(static_cast<double>(gamma1) <= c_bound * static_cast<double>(gamma));
        }
    }
}

TEST_CASE("boundedness constant formula") {
    CHECK(bounded_degree_c(3, 2) == 12.0);
    CHECK(bounded_degree_c(3, 3) == 24.0);
    CHECK(bounded_degree_c(4, 2) == 36.0);
    CHECK_THROWS_AS(bounded_degree_c(2, 3), std::invalid_argument);
}
