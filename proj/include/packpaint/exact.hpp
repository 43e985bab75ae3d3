#pragma once

#include <vector>

#include "packpaint/graph.hpp"
#include "packpaint/packing.hpp"

namespace packpaint {

struct SearchBudget {
    long long max_nodes = 10'000'000;
    double max_seconds = 60.0;
};

enum class Verdict { Feasible, Infeasible, Timeout };

struct DecisionResult {
    Verdict verdict = Verdict::Infeasible;
    PackingColoring coloring;  // meaningful only when Feasible
    long long nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

// Complete backtracking over vertex-to-class assignments: is g S-packing
// colorable for seq? Vertices in descending-degree order; a vertex may join
// a class only if its radius-s ball avoids the class; equal-parameter
// classes are opened in order (symmetry breaking). Infeasible only after
// full exhaustion; budget overrun yields Timeout.
DecisionResult decide(const Graph& g, const PackingSequence& seq, SearchBudget budget = {});

// Template for min_sequence_search: parameters with per-parameter count
// ranges 0..max_count.
struct FamilyTemplate {
    std::vector<std::pair<int, int>> terms;  // (s, max_count)
};

struct FrontierPoint {
    std::vector<int> counts;  // one per template term
    Verdict verdict = Verdict::Feasible;
    PackingSequence sequence() const;
    const FamilyTemplate* family = nullptr;
};

// Pareto-minimal feasible count tuples of the family, each certified by
// decide; tuples whose decision timed out are returned flagged Timeout.
std::vector<FrontierPoint> min_sequence_search(const Graph& g, const FamilyTemplate& family,
                                               SearchBudget per_call = {});

}  // namespace packpaint
