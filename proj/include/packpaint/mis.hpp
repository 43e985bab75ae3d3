#pragma once

#include <cstdint>
#include <vector>

#include "packpaint/graph.hpp"

namespace packpaint {

// Integer weights for the independent-set objective: degree-k vertices count
// heavy_weight, everything else light_weight. (5,3) encodes the 1/0.6 split
// and (5,2) the 1/0.4 split with exact integer arithmetic.
struct WeightProfile {
    int heavy_weight;
    int light_weight;
    int k;
};

inline WeightProfile weights_53(int k) { return {5, 3, k}; }
inline WeightProfile weights_52(int k) { return {5, 2, k}; }

// Bounded-exchange move family: remove up to max_remove vertices from the
// set, add up to max_add from outside. The defaults are the largest
// exchanges any of the construction arguments uses.
struct ExchangePolicy {
    int max_remove = 3;
    int max_add = 2;
    bool allow_alternating_paths = true;
    std::uint64_t tiebreak_seed = 0;
};

// Ordered disjoint independent sets S_1..S_m plus the residual; vertices
// keep their original ids. fathers[r][i] lists residual[r]'s neighbors in
// layer i.
struct LayeredFamily {
    std::vector<std::vector<int>> layers;
    std::vector<int> residual;
    int k = 0;
    std::vector<std::vector<std::vector<int>>> fathers;

    // Rebuilds residual (sorted) and the father index from layers.
    void index_fathers(const Graph& g);
    // Position of v in residual, or -1.
    int residual_index(int v) const;

private:
    std::vector<int> residual_pos_;
};

// Weighted size of an independent set; rejects dependent sets with the
// witness edge in the message.
long long phi(const Graph& g, const std::vector<int>& t, const WeightProfile& w);

// Local search to a fixed point of the policy move family: no removal of
// <= max_remove set vertices plus addition of <= max_add outside vertices
// that keeps independence strictly increases phi. Deterministic per seed,
// phi(result) >= phi(start).
std::vector<int> exchange_optimize(const Graph& g, const WeightProfile& w,
                                   const ExchangePolicy& policy,
                                   const std::vector<int>& start = {});

// Globally phi-maximum independent set by branch and bound (branch on the
// max-degree vertex, bound by the sum of remaining weights). Rejects graphs
// above the cap.
std::pair<std::vector<int>, long long> exact_mwis(const Graph& g, const WeightProfile& w,
                                                  int vertex_cap = 40);

// Iterated layer extraction: S_i optimal (exchange-local or exact) on the
// graph left after removing S_1..S_{i-1}. Heaviness always refers to
// degrees in the original g.
LayeredFamily build_layers(const Graph& g, int m, const WeightProfile& w,
                           const ExchangePolicy& policy, bool use_exact = false);

// m disjoint nonempty independent sets, locally optimal for (maximize total
// size, then minimize theta) under bounded exchanges, relocations and
// alternating-path augmentations. Rejects graphs with fewer than m vertices.
LayeredFamily build_balanced_family(const Graph& g, int m, const ExchangePolicy& policy);

// Number of edges with one end in the union of layers and one in the
// residual.
int theta(const Graph& g, const LayeredFamily& fam);

}  // namespace packpaint
