#pragma once

#include <cstdint>
#include <string>

#include "packpaint/graph.hpp"

namespace packpaint {

// t+1 linked copies of K_k: a t-saturated graph of maximum degree k with
// diameter 3. Copy i sits on vertices i*k..i*k+k-1; copies i<j are joined by
// one edge between distinct link vertices. Requires k >= 3, 1 <= t <= k.
Graph gen_gkt(int k, int t);

// Two copies of K_k joined by a path of length two through a fresh middle
// vertex: a 0-saturated k-degree graph of diameter 4. Requires k >= 3.
Graph gen_clique_bridge(int k);

// Random graph with maximum degree exactly k and saturation exactly t,
// by seeded construction plus rejection. Requires n >= k+1, 0 <= t <= k.
// Throws after a bounded number of failed attempts.
Graph gen_random_saturated(int n, int k, int t, std::uint64_t seed);

Graph gen_petersen();
Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);

// Lookup by name: "petersen", "path", "cycle", "complete" (the latter three
// take n). Throws on unknown names.
Graph named_graph(const std::string& name, int n = 0);

}  // namespace packpaint
