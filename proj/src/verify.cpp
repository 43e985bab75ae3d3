#include "packpaint/verify.hpp"

#include <map>

namespace packpaint {

std::string Violation::describe() const {
    if (kind == Kind::UncoloredVertex) return "vertex " + std::to_string(u) + " uncolored";
    return "class " + std::to_string(class_index) + " (s=" + std::to_string(distance_parameter) +
           "): dist(" + std::to_string(u) + "," + std::to_string(v) +
           ")=" + std::to_string(measured_distance);
}

VerifyResult verify(const Graph& g, const PackingSequence& seq, const PackingColoring& col) {
    // Budget check first: per parameter, the coloring may not use more
    // classes than the sequence provides.
    std::map<int, int> used;
    for (const auto& c : col.classes) {
        if (c.s < 1) throw std::invalid_argument("class parameter must be >= 1");
        ++used[c.s];
    }
    for (auto [s, m] : used)
        if (m > seq.count(s))
            throw std::invalid_argument("coloring uses " + std::to_string(m) + " classes of s=" +
                                        std::to_string(s) + " but sequence " + seq.to_string() +
                                        " budgets " + std::to_string(seq.count(s)));

    std::vector<int> owner(g.num_vertices(), -1);
    for (int ci = 0; ci < int(col.classes.size()); ++ci) {
        for (int v : col.classes[ci].vertices) {
            if (v < 0 || v >= g.num_vertices())
                throw std::invalid_argument("class vertex out of range");
            if (owner[v] != -1)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " appears in two classes");
            owner[v] = ci;
        }
    }

    VerifyResult res;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (owner[v] != -1) continue;
        Violation viol;
        viol.kind = Violation::Kind::UncoloredVertex;
        viol.u = v;
        res.violations.push_back(viol);
    }

    // Truncated BFS from each class member; a same-class vertex inside the
    // radius-s ball is a violation. Report each pair once (u < v).
    for (int ci = 0; ci < int(col.classes.size()); ++ci) {
        const auto& cls = col.classes[ci];
        for (int u : cls.vertices) {
            auto dist = bfs_distances_bounded(g, u, cls.s);
            for (int v : cls.vertices) {
                if (v <= u) continue;
                if (dist[v] != kUnreachable && dist[v] <= cls.s) {
                    Violation viol;
                    viol.kind = Violation::Kind::PairTooClose;
                    viol.class_index = ci;
                    viol.distance_parameter = cls.s;
                    viol.u = u;
                    viol.v = v;
                    viol.measured_distance = dist[v];
                    res.violations.push_back(viol);
                }
            }
        }
    }
    return res;
}

}  // namespace packpaint
