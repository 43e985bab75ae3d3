#include <doctest.h>

#include <algorithm>

#include "packpaint/exact.hpp"
#include "packpaint/gen.hpp"
#include "packpaint/pipelines.hpp"
#include "packpaint/verify.hpp"
#include "test_util.hpp"

using namespace packpaint;

TEST_SUITE_BEGIN("pipelines");

namespace {

void check_valid(const Graph& g, const PipelineResult& res) {
    auto check = verify(g, res.seq, res.coloring);
    if (!check.ok()) {
        for (const auto& v : check.violations) MESSAGE(v.describe());
    }
    CHECK(check.ok());
    CHECK(res.coloring.uncolored.empty());
}

int classes_with(const PackingColoring& col, int s) {
    int c = 0;
    for (const auto& cls : col.classes)
        if (cls.s == s && !cls.vertices.empty()) ++c;
    return c;
}

}  // namespace

TEST_CASE("color_deg2 on paths and cycles") {
    auto p6 = color_deg2(gen_path(6));
    CHECK(p6.seq == PackingSequence::parse("(1^2)"));
    check_valid(gen_path(6), p6);

    auto c6 = color_deg2(gen_cycle(6));
    CHECK(c6.seq == PackingSequence::parse("(1^2)"));
    check_valid(gen_cycle(6), c6);

    // C5 admits (1^2,2); the exact solver certifies the same bound
    auto c5 = color_deg2(gen_cycle(5));
    CHECK(c5.seq == PackingSequence::parse("(1^2,2)"));
    check_valid(gen_cycle(5), c5);
    CHECK(decide(gen_cycle(5), c5.seq).verdict == Verdict::Feasible);

    // mixtures of odd cycles share the single 2-class
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 7; ++i) edges.emplace_back(5 + i, 5 + (i + 1) % 7);
    auto g = Graph::from_edge_list(12, edges);
    auto res = color_deg2(g);
    CHECK(res.seq == PackingSequence::parse("(1^2,2)"));
    check_valid(g, res);

    CHECK_THROWS_AS(color_deg2(gen_complete(4)), std::invalid_argument);
}

TEST_CASE("zero-saturated pipeline") {
    auto star = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
    auto res = color_zero_saturated(star);
    check_valid(star, res);
    CHECK(res.seq == PackingSequence::parse("(1^2,3)"));

    for (int k = 3; k <= 5; ++k) {
        auto bridge = gen_clique_bridge(k);
        auto r = color_zero_saturated(bridge);
        check_valid(bridge, r);
        CHECK(classes_with(r.coloring, 3) <= 1);
    }

    CHECK_THROWS_AS(color_zero_saturated(gen_complete(4)), std::invalid_argument);
    CHECK_THROWS_AS(color_zero_saturated(gen_path(4)), std::invalid_argument);
}

TEST_CASE("zero-saturated trace: residual max degree <= k-2") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = gen_random_saturated(36, 4, 0, seed);
        auto res = color_zero_saturated(g, seed);
        check_valid(g, res);
        REQUIRE(res.trace.layers.layers.size() == 1);
        auto sub = induced_subgraph(g, res.trace.layers.residual);
        for (int i = 0; i < sub.graph.num_vertices(); ++i) CHECK(sub.graph.degree(i) <= 2);
    }
}

TEST_CASE("zero-saturated k=4: odd residual cycle repaired into the 3-class") {
    // C5 where vertices 0 and 2 carry two pendant leaves and 1,3,4 carry
    // one: 0-saturated with k=4, and the weight-optimal set is exactly the
    // leaves, so the whole cycle stays residual. With budget k-2 = 2 the
    // odd cycle cannot be Brooks-colored; the pipeline must move one cycle
    // vertex into the 3-class.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    int next = 5;
    std::vector<int> leaf_counts{2, 1, 2, 1, 1};
    for (int v = 0; v < 5; ++v)
        for (int l = 0; l < leaf_counts[v]; ++l) edges.emplace_back(v, next++);
    auto g = Graph::from_edge_list(next, edges);
    auto prof = degree_profile(g);
    REQUIRE(prof.k == 4);
    REQUIRE(prof.saturation == 0);

    auto res = color_zero_saturated(g);
    check_valid(g, res);
    CHECK(res.trace.escalation == Escalation::LocalSearch);
    REQUIRE(res.trace.C.size() == 1);
    CHECK(res.trace.C[0] < 5);                // a cycle vertex
    CHECK(g.degree(res.trace.C[0]) < 4);      // a non-k vertex
    // the residual really is the whole cycle
    CHECK(res.trace.layers.residual == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("mid-saturated pipeline on gkt and random instances") {
    for (int k = 3; k <= 6; ++k)
        for (int t = 1; t <= k - 2; ++t) {
            auto g = gen_gkt(k, t);
            auto res = color_mid_saturated(g);
            check_valid(g, res);
            CHECK(res.seq == PackingSequence::ones_twos_threes(k - 1, 1));
        }

    // C6 with a chord: one 3-vertex, k=3, saturation <= 1
    auto chord = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
    auto prof = degree_profile(chord);
    REQUIRE(prof.k == 3);
    REQUIRE(prof.saturation == 1);
    auto res = color_mid_saturated(chord);
    check_valid(chord, res);
    CHECK(decide(chord, res.seq).verdict == Verdict::Feasible);

    CHECK_THROWS_AS(color_mid_saturated(gen_clique_bridge(3)), std::invalid_argument);
}

TEST_CASE("mid-saturated trace invariants") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto g = gen_random_saturated(40, 5, 3, seed);
        auto res = color_mid_saturated(g, seed);
        check_valid(g, res);
        // maximal residual paths have length <= 2 and consistent types
        for (const auto& [path, type] : res.trace.path_types) {
            CHECK(path.size() <= 3);
            bool known = type == PathType::P1 || type == PathType::P2 || type == PathType::P3 ||
                         type == PathType::P4;
            CHECK(known);
        }
        // E and E' are independent
        for (std::size_t i = 0; i < res.trace.E.size(); ++i)
            for (std::size_t j = i + 1; j < res.trace.E.size(); ++j)
                CHECK(!g.adjacent(res.trace.E[i], res.trace.E[j]));
        for (std::size_t i = 0; i < res.trace.E_prime.size(); ++i)
            for (std::size_t j = i + 1; j < res.trace.E_prime.size(); ++j)
                CHECK(!g.adjacent(res.trace.E_prime[i], res.trace.E_prime[j]));
    }
}

TEST_CASE("high-saturated pipeline") {
    auto g43 = gen_gkt(4, 3);
    auto res = color_high_saturated(g43);
    check_valid(g43, res);
    CHECK(res.seq == PackingSequence::parse("(1^3,2^3)"));

    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto g = gen_random_saturated(40, 5, 4, seed);
        auto res5 = color_high_saturated(g, seed);
        check_valid(g, res5);
        // residual paths of length <= 3; interiors of 2/3-paths k-vertices
        for (const auto& [path, type] : res5.trace.path_types) {
            CHECK(path.size() <= 4);
            if (type == PathType::Len2 || type == PathType::Len3)
                for (std::size_t i = 1; i + 1 < path.size(); ++i)
                    CHECK(g.degree(path[i]) == 5);
        }
    }

    CHECK_THROWS_AS(color_high_saturated(gen_gkt(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(color_high_saturated(gen_gkt(4, 2)), std::invalid_argument);

    // K5 minus one or two disjoint edges lowers the saturation below k-1,
    // so the high route rejects while auto still colors validly
    auto k5 = gen_complete(5);
    for (auto removed : {std::vector<std::pair<int, int>>{{0, 1}},
                         std::vector<std::pair<int, int>>{{0, 1}, {2, 3}}}) {
        std::vector<std::pair<int, int>> edges;
        for (auto e : k5.edges())
            if (std::find(removed.begin(), removed.end(), e) == removed.end())
                edges.push_back(e);
        auto g = Graph::from_edge_list(5, edges);
        CHECK_THROWS_AS(color_high_saturated(g), std::invalid_argument);
        auto res = color_auto(g);
        check_valid(g, res);
    }
}

TEST_CASE("high-saturated recoloring sweep fires and stays proper") {
    // seed 0 produces two father recolors at (n=40, k=4, t=3)
    auto g = gen_random_saturated(40, 4, 3, 0);
    auto res = color_high_saturated(g, 0);
    check_valid(g, res);
    REQUIRE(!res.trace.recolor_log.empty());
    for (const auto& step : res.trace.recolor_log) {
        CHECK(step.old_class != step.new_class);
        CHECK(step.old_class >= 0);
        CHECK(step.new_class >= 0);
        CHECK(step.new_class < 3);  // 1-colors for k=4 are 0..2
    }
    // recolored vertices must end in a 1-class
    for (const auto& step : res.trace.recolor_log) {
        bool found = false;
        for (const auto& cls : res.coloring.classes)
            if (cls.s == 1)
                for (int v : cls.vertices)
                    if (v == step.father) found = true;
        CHECK(found);
    }
}

TEST_CASE("general pipeline") {
    // K4: k=3, two singleton layers, residual pair colored with two 2s
    auto res = color_general(gen_complete(4));
    check_valid(gen_complete(4), res);
    CHECK(res.seq == PackingSequence::parse("(1^2,2^3)"));
    CHECK(decide(gen_complete(4), PackingSequence::parse("(1^2,2^2)")).verdict ==
          Verdict::Feasible);

    auto petersen = gen_petersen();
    auto pres = color_general(petersen);
    check_valid(petersen, pres);
    CHECK(decide(petersen, pres.seq).verdict == Verdict::Feasible);

    for (int k = 3; k <= 5; ++k) {
        auto g = gen_gkt(k, k);
        auto r = color_general(g);
        check_valid(g, r);
        CHECK(r.seq == PackingSequence::ones_twos_threes(k - 1, k));
    }
}

TEST_CASE("general trace: residual degrees at least k-1") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto g = gen_random_saturated(30, 4, 4, seed);
        auto res = color_general(g, seed);
        check_valid(g, res);
        if (res.trace.escalation == Escalation::LocalSearch)
            for (int v : res.trace.layers.residual) CHECK(g.degree(v) >= 3);
    }
}

TEST_CASE("auto dispatch") {
    auto c7 = color_auto(gen_cycle(7));
    CHECK(c7.seq == PackingSequence::parse("(1^2,2)"));

    auto g53 = color_auto(gen_gkt(5, 3));
    CHECK(g53.seq == PackingSequence::parse("(1^4,2)"));

    // Petersen is cubic and 3-saturated: the general route
    auto pet = color_auto(gen_petersen());
    CHECK(pet.seq == PackingSequence::parse("(1^2,2^3)"));

    // k=3, t=2 also routes to general
    auto g32 = gen_gkt(3, 2);
    auto res = color_auto(g32);
    CHECK(res.seq == PackingSequence::parse("(1^2,2^3)"));
    check_valid(g32, res);
}

TEST_CASE("disconnected inputs merge classes per parameter") {
    // two copies of gkt(3,1), disjoint union
    auto one = gen_gkt(3, 1);
    std::vector<std::pair<int, int>> edges = one.edges();
    int off = one.num_vertices();
    for (auto [u, v] : one.edges()) edges.emplace_back(u + off, v + off);
    auto two = Graph::from_edge_list(2 * off, edges);
    auto res = color_auto(two);
    check_valid(two, res);
    CHECK(res.seq == PackingSequence::parse("(1^2,2)"));
    // still only one 2-class after merging
    CHECK(classes_with(res.coloring, 2) <= 1);
}

TEST_CASE("general pipeline with a component smaller than the layer count") {
    // G_{4,4} plus a disjoint edge: the edge component has 2 < k-1 = 3
    // vertices and is absorbed into singleton 1-classes
    auto big = gen_gkt(4, 4);
    auto edges = big.edges();
    int off = big.num_vertices();
    edges.emplace_back(off, off + 1);
    auto g = Graph::from_edge_list(off + 2, edges);
    auto res = color_auto(g);
    check_valid(g, res);
    CHECK(res.seq == PackingSequence::parse("(1^3,2^4)"));
    for (int v : res.trace.layers.residual) CHECK(g.degree(v) >= 3);
}

TEST_CASE("mixed structures in one graph: cliques, cycles, paths, isolated") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        // disjoint union of a gkt block, a C5, a P4, K4 and two isolated
        // vertices; global saturation comes from the gkt block
        testutil::SplitMix rng{seed};
        int k = 4 + rng.below(3);
        int t = 1 + rng.below(k);
        auto block = gen_gkt(k, t);
        auto edges = block.edges();
        int off = block.num_vertices();
        for (int i = 0; i < 5; ++i) edges.emplace_back(off + i, off + (i + 1) % 5);
        off += 5;
        for (int i = 0; i + 1 < 4; ++i) edges.emplace_back(off + i, off + i + 1);
        off += 4;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) edges.emplace_back(off + i, off + j);
        off += 4;
        off += 2;  // isolated
        auto g = Graph::from_edge_list(off, edges);
        auto res = color_auto(g, seed);
        check_valid(g, res);
    }
}

TEST_CASE("deterministic per seed") {
    auto g = gen_random_saturated(40, 5, 5, 3);
    auto a = color_auto(g, 12);
    auto b = color_auto(g, 12);
    REQUIRE(a.coloring.classes.size() == b.coloring.classes.size());
    for (std::size_t i = 0; i < a.coloring.classes.size(); ++i) {
        CHECK(a.coloring.classes[i].s == b.coloring.classes[i].s);
        CHECK(a.coloring.classes[i].vertices == b.coloring.classes[i].vertices);
    }
}

TEST_SUITE_END();
