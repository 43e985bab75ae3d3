#include <doctest.h>

#include <algorithm>
#include <functional>

#include "packpaint/gen.hpp"
#include "packpaint/mis.hpp"
#include "test_util.hpp"

using namespace packpaint;

TEST_SUITE_BEGIN("mis");

TEST_CASE("phi") {
    auto k4 = gen_complete(4);
    CHECK(phi(k4, {}, weights_53(3)) == 0);
    CHECK(phi(k4, {1}, weights_53(3)) == 5);

    auto star = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(phi(star, {1, 2, 3}, weights_53(3)) == 9);

    CHECK_THROWS_AS(phi(k4, {0, 1}, weights_53(3)), std::invalid_argument);
}

TEST_CASE("exact_mwis frozen small cases") {
    // C5, k=2: best is two nonadjacent degree-2 vertices -> 10
    // (brute force over all 32 subsets confirms; frozen here)
    auto [c5_set, c5_phi] = exact_mwis(gen_cycle(5), weights_53(2));
    CHECK(c5_phi == 10);
    CHECK(c5_set.size() == 2);

    // P3, k=2: the two ends (1-vertices) beat the middle 2-vertex: 6 vs 5
    auto [p3_set, p3_phi] = exact_mwis(gen_path(3), weights_53(2));
    CHECK(p3_phi == 6);
    CHECK(p3_set == std::vector<int>{0, 2});

    auto [single, single_phi] = exact_mwis(gen_path(1), weights_53(1));
    CHECK(single == std::vector<int>{0});
    CHECK(single_phi == 3);  // an isolated vertex is not a 1-vertex

    CHECK_THROWS_AS(exact_mwis(testutil::random_graph(50, 0.1, 1), weights_53(4)),
                    std::invalid_argument);
}

TEST_CASE("exact_mwis equals subset brute force and dominates exchange") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        testutil::SplitMix rng{seed + 5};
        int n = 4 + rng.below(15);
        auto g = testutil::random_graph(n, 0.15 + 0.25 * rng.unit(), seed);
        auto w = weights_53(degree_profile(g).k);
        auto [set, value] = exact_mwis(g, w);
        CHECK(value == testutil::brute_force_mwis(g, w));
        CHECK(phi(g, set, w) == value);  // also asserts independence
        ExchangePolicy pol;
        pol.tiebreak_seed = seed;
        CHECK(value >= phi(g, exchange_optimize(g, w, pol), w));
    }
}

TEST_CASE("exchange_optimize on hand cases") {
    // C4: all vertices are 2-vertices (k=2), optimum is an opposite pair
    auto res = exchange_optimize(gen_cycle(4), weights_53(2), {});
    CHECK(phi(gen_cycle(4), res, weights_53(2)) == 10);

    res = exchange_optimize(gen_complete(4), weights_53(3), {});
    CHECK(res.size() == 1);

    auto empty5 = Graph::from_edge_list(5, {});
    res = exchange_optimize(empty5, weights_53(0), {});
    CHECK(res.size() == 5);
}

TEST_CASE("exchange_optimize reaches a fixed point of the full move family") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        testutil::SplitMix rng{seed + 17};
        int n = 5 + rng.below(8);
        auto g = testutil::random_graph(n, 0.2 + 0.3 * rng.unit(), seed);
        auto w = weights_53(degree_profile(g).k);
        ExchangePolicy pol;
        pol.tiebreak_seed = seed;
        auto set = exchange_optimize(g, w, pol);
        CHECK(testutil::is_exchange_fixed_point(g, w, pol, set));
    }
}

TEST_CASE("exchange_optimize improves on its start and is deterministic") {
    auto g = testutil::random_graph(20, 0.2, 42);
    auto w = weights_53(degree_profile(g).k);
    ExchangePolicy pol;
    pol.tiebreak_seed = 7;
    auto a = exchange_optimize(g, w, pol);
    auto b = exchange_optimize(g, w, pol);
    CHECK(a == b);

    std::vector<int> start{0};
    auto c = exchange_optimize(g, w, pol, start);
    CHECK(phi(g, c, w) >= phi(g, start, w));
}

TEST_CASE("build_layers degenerate and hand cases") {
    auto g = testutil::random_graph(14, 0.25, 3);
    auto w = weights_53(degree_profile(g).k);
    ExchangePolicy pol;
    auto fam1 = build_layers(g, 1, w, pol, false);
    auto direct = exchange_optimize(g, w, pol);
    CHECK(fam1.layers.size() == 1);
    CHECK(fam1.layers[0] == direct);

    // K4, exact layers: two singleton layers, two adjacent residuals
    auto famk4 = build_layers(gen_complete(4), 2, weights_53(3), pol, true);
    CHECK(famk4.layers[0].size() == 1);
    CHECK(famk4.layers[1].size() == 1);
    CHECK(famk4.residual.size() == 2);

    // C6, k=2: one exact layer is a maximum independent set of size 3
    auto famc6 = build_layers(gen_cycle(6), 1, weights_53(2), pol, true);
    CHECK(famc6.layers[0].size() == 3);
}

TEST_CASE("build_layers: every uncovered vertex sees every earlier layer") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto g = gen_random_saturated(30, 4, 2, seed);
        ExchangePolicy pol;
        pol.tiebreak_seed = seed;
        auto fam = build_layers(g, 2, weights_53(4), pol, false);
        std::vector<char> in_layer(g.num_vertices(), 0);
        // check coverage layer by layer
        std::vector<char> covered_so_far(g.num_vertices(), 0);
        for (const auto& layer : fam.layers) {
            for (int v = 0; v < g.num_vertices(); ++v) {
                if (covered_so_far[v]) continue;
                if (std::find(layer.begin(), layer.end(), v) != layer.end()) continue;
                bool sees = false;
                for (int u : layer)
                    if (g.adjacent(u, v)) sees = true;
                CHECK(sees);
            }
            for (int u : layer) covered_so_far[u] = 1;
        }
        (void)in_layer;
    }
}

TEST_CASE("build_layers residual degree bounds under exact layers (weights 5,3)") {
    // with k-2 exact layers, residual m-vertices
    // (m <= k-2) have 0 residual neighbors, (k-1)-vertices at most 1,
    // k-vertices at most 2
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto g = gen_random_saturated(24, 4, 2, seed);
        int k = 4;
        ExchangePolicy pol;
        pol.tiebreak_seed = seed;
        auto fam = build_layers(g, k - 2, weights_53(k), pol, true);
        auto sub = induced_subgraph(g, fam.residual);
        for (int i = 0; i < sub.graph.num_vertices(); ++i) {
            int v = sub.to_original[i];
            int allowed = g.degree(v) >= k - 1 ? g.degree(v) - (k - 2) : 0;
            CHECK(sub.graph.degree(i) <= allowed);
        }
    }
}

TEST_CASE("theta") {
    auto k4 = gen_complete(4);
    LayeredFamily fam;
    fam.layers = {{0}, {1}, {2}};
    fam.index_fathers(k4);
    CHECK(theta(k4, fam) == 3);

    LayeredFamily all;
    all.layers = {{0, 2}, {1, 3}};
    all.index_fathers(gen_cycle(4));
    CHECK(theta(gen_cycle(4), all) == 0);

    auto c5 = gen_cycle(5);
    LayeredFamily c5fam;
    c5fam.layers = {{0, 2}, {1, 3}};
    c5fam.index_fathers(c5);
    CHECK(theta(c5, c5fam) == 2);
}

TEST_CASE("build_balanced_family hand cases") {
    // K4 with m=3: exhaustive over assignments gives |S|=3, theta=3
    auto fam = build_balanced_family(gen_complete(4), 3, {});
    int total = 0;
    for (const auto& l : fam.layers) {
        CHECK(l.size() == 1);
        total += int(l.size());
    }
    CHECK(total == 3);
    CHECK(fam.residual.size() == 1);
    CHECK(theta(gen_complete(4), fam) == 3);

    // C6 with m=2: the bipartition covers everything
    fam = build_balanced_family(gen_cycle(6), 2, {});
    CHECK(fam.residual.empty());
    CHECK(theta(gen_cycle(6), fam) == 0);

    // single edge, m=2
    fam = build_balanced_family(gen_path(2), 2, {});
    CHECK(fam.residual.empty());

    CHECK_THROWS_AS(build_balanced_family(gen_path(2), 3, {}), std::invalid_argument);
}

namespace {

// Test-local exhaustive rescan: does any maximal alternating path with both
// ends residual yield a valid size-increasing swap for layer t?
bool augmenting_path_exists(const Graph& g, const LayeredFamily& fam) {
    const int n = g.num_vertices();
    std::vector<int> layer_of(n, -1);
    for (int li = 0; li < int(fam.layers.size()); ++li)
        for (int v : fam.layers[li]) layer_of[v] = li;
    for (int t = 0; t < int(fam.layers.size()); ++t) {
        std::vector<int> fc(n, 0);
        for (int v = 0; v < n; ++v)
            if (layer_of[v] == -1)
                for (int u : g.neighbors(v))
                    if (layer_of[u] == t) ++fc[v];
        std::vector<char> on_path(n, 0);
        std::vector<int> xs, us;
        std::function<bool(int)> extend = [&](int u) -> bool {
            // u: layer vertex at the path end
            for (int y : g.neighbors(u)) {
                if (layer_of[y] != -1 || on_path[y]) continue;
                if (fc[y] == 1) {
                    // complete; check swap validity
                    bool ok = us.size() >= 2;
                    std::vector<int> all_x = xs;
                    all_x.push_back(y);
                    for (std::size_t i = 0; i < all_x.size() && ok; ++i)
                        for (std::size_t j = i + 1; j < all_x.size(); ++j)
                            if (g.adjacent(all_x[i], all_x[j])) ok = false;
                    if (ok) return true;
                    continue;
                }
                if (fc[y] != 2) continue;
                int next_u = -1;
                for (int w : g.neighbors(y))
                    if (layer_of[w] == t && w != u) next_u = w;
                if (next_u < 0 || on_path[next_u]) continue;
                on_path[y] = on_path[next_u] = 1;
                xs.push_back(y);
                us.push_back(next_u);
                if (extend(next_u)) return true;
                on_path[y] = on_path[next_u] = 0;
                xs.pop_back();
                us.pop_back();
            }
            return false;
        };
        for (int x = 0; x < n; ++x) {
            if (layer_of[x] != -1 || fc[x] != 1) continue;
            int u0 = -1;
            for (int u : g.neighbors(x))
                if (layer_of[u] == t) u0 = u;
            std::fill(on_path.begin(), on_path.end(), 0);
            on_path[x] = on_path[u0] = 1;
            xs = {x};
            us = {u0};
            if (extend(u0)) return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("balanced family: no improving augmentation remains") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = gen_random_saturated(25, 4, 4, seed);
        ExchangePolicy pol;
        pol.tiebreak_seed = seed;
        auto fam = build_balanced_family(g, 3, pol);
        // every layer nonempty, disjoint, independent
        std::vector<int> owner(g.num_vertices(), -1);
        for (int li = 0; li < 3; ++li) {
            CHECK(!fam.layers[li].empty());
            for (int v : fam.layers[li]) {
                CHECK(owner[v] == -1);
                owner[v] = li;
            }
            for (std::size_t i = 0; i < fam.layers[li].size(); ++i)
                for (std::size_t j = i + 1; j < fam.layers[li].size(); ++j)
                    CHECK(!g.adjacent(fam.layers[li][i], fam.layers[li][j]));
        }
        // single-vertex additions exhausted: every residual vertex has a
        // father in every layer
        for (std::size_t r = 0; r < fam.residual.size(); ++r)
            for (int li = 0; li < 3; ++li) CHECK(!fam.fathers[r][li].empty());
        CHECK(!augmenting_path_exists(g, fam));
    }
}

TEST_CASE("balanced family on stars") {
    // hub-and-leaves: layers must split hub from leaves
    auto star = Graph::from_edge_list(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                                          {0, 7}, {0, 8}});
    for (int m = 2; m <= 4; ++m) {
        auto fam = build_balanced_family(star, m, {});
        CHECK(fam.residual.empty());  // hub in one layer, leaves spread over others
        for (const auto& layer : fam.layers) CHECK(!layer.empty());
        CHECK(theta(star, fam) == 0);
    }
}

TEST_CASE("balanced family is deterministic per seed") {
    auto g = gen_random_saturated(30, 5, 5, 11);
    ExchangePolicy pol;
    pol.tiebreak_seed = 4;
    auto a = build_balanced_family(g, 4, pol);
    auto b = build_balanced_family(g, 4, pol);
    CHECK(a.layers == b.layers);
    CHECK(a.residual == b.residual);
}

TEST_SUITE_END();
