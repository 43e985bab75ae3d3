#pragma once

#include <variant>
#include <vector>

#include "packpaint/graph.hpp"

namespace packpaint {

struct ProperColoring {
    std::vector<int> assignment;  // vertex -> color, 0-based dense prefix
    int colors_used = 0;
};

// Why a component cannot be colored within budget: it is the complete graph
// on budget+1 vertices, or an odd cycle with budget 2.
struct BrooksObstruction {
    enum class Kind { Complete, OddCycle };
    Kind kind;
    std::vector<int> component;
};

using BrooksResult = std::variant<ProperColoring, BrooksObstruction>;

// Proper coloring with at most `budget` colors, per connected component.
// Requires budget >= max degree. Returns the obstruction instead of ever
// exceeding the budget.
BrooksResult brooks_color(const Graph& g, int budget);

// First-fit along the given vertex order; uses at most Delta+1 colors.
ProperColoring greedy_color(const Graph& g, const std::vector<int>& order);

}  // namespace packpaint
