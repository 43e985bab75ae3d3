#pragma once

#include <string>
#include <vector>

#include "packpaint/graph.hpp"
#include "packpaint/packing.hpp"

namespace packpaint {

// One broken constraint found by verify(). Either a same-class pair that is
// too close, or a vertex missing from every class.
struct Violation {
    enum class Kind { PairTooClose, UncoloredVertex };
    Kind kind = Kind::PairTooClose;
    int class_index = -1;       // index into coloring.classes (pair kind)
    int distance_parameter = 0; // the class's s (pair kind)
    int u = -1;                 // pair member, or the uncolored vertex
    int v = -1;
    int measured_distance = 0;  // dist(u,v) <= s (pair kind)

    std::string describe() const;
};

struct VerifyResult {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks that col is a valid S-packing coloring of g for sequence seq:
// classes partition V, and each class with parameter s holds its members
// pairwise at distance >= s+1. Reports all violations. Throws
// std::invalid_argument when the class parameters do not fit inside seq's
// multiplicities or a vertex appears twice.
VerifyResult verify(const Graph& g, const PackingSequence& seq, const PackingColoring& col);

}  // namespace packpaint
