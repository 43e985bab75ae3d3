#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "packpaint/graph.hpp"
#include "packpaint/mis.hpp"
#include "packpaint/packing.hpp"

namespace packpaint {

// How far a pipeline had to climb: exchange-local layers, exact layers, or
// the exact backtracking solver for the whole target sequence.
enum class Escalation { LocalSearch, ExactLayers, ExactSolver };

std::string to_string(Escalation e);

// Maximal-path classes used by the mid- and high-saturation constructions.
enum class PathType { P1, P2, P3, P4, Len1, Len2, Len3 };

struct RecolorStep {
    int father = -1;
    int old_class = -1;  // 1-class indices (0-based)
    int new_class = -1;
};

// Everything the construction built on the way, so tests can check the
// structural claims directly.
struct PipelineTrace {
    LayeredFamily layers;
    std::vector<std::pair<std::vector<int>, PathType>> path_types;
    std::vector<int> E;
    std::vector<int> E_prime;
    std::vector<int> C;
    std::vector<RecolorStep> recolor_log;
    Escalation escalation = Escalation::LocalSearch;
};

struct PipelineResult {
    PackingSequence seq;
    PackingColoring coloring;
    PipelineTrace trace;
};

// Raised when every escalation rung fails; carries the deepest failure.
struct PipelineFailure : std::runtime_error {
    PipelineFailure(const std::string& what, std::vector<int> witness_vertices = {})
        : std::runtime_error(what), witness(std::move(witness_vertices)) {}
    std::vector<int> witness;
};

// Union of paths and cycles: (1^2) for bipartite components, one 2-class
// for odd cycles, widening per component only if the exact solver proves it
// necessary. Requires max degree <= 2.
PipelineResult color_deg2(const Graph& g);

// 0-saturated, k >= 3: coloring fitting (1^{k-1},3).
PipelineResult color_zero_saturated(const Graph& g, std::uint64_t seed = 0);

// t-saturated with 1 <= t <= k-2, k >= 3: coloring fitting (1^{k-1},2).
PipelineResult color_mid_saturated(const Graph& g, std::uint64_t seed = 0);

// (k-1)-saturated, k >= 4: coloring fitting (1^{k-1},2^{k-1}).
PipelineResult color_high_saturated(const Graph& g, std::uint64_t seed = 0);

// Any graph, k >= 3: coloring fitting (1^{k-1},2^k).
PipelineResult color_general(const Graph& g, std::uint64_t seed = 0);

// Dispatch on (max degree, saturation) to the matching pipeline.
PipelineResult color_auto(const Graph& g, std::uint64_t seed = 0);

}  // namespace packpaint
