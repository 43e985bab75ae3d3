#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "packpaint/graph.hpp"
#include "packpaint/packing.hpp"
#include "packpaint/pipelines.hpp"

namespace packpaint {

// Edge-list text format: header "n m", then m lines "u v" (0-indexed);
// '#' starts a comment line. The writer emits edges with u < v, sorted.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// FNV-1a 64 over the canonical edge-list text, as fixed-width hex.
std::string edge_list_digest(const Graph& g);

// Machine-readable outcome of a `color` run. Serialized as JSON with stable
// key order; timings are included only when requested so reports stay
// byte-reproducible by default.
struct ColoringReport {
    int vertices = 0;
    int edges = 0;
    std::string digest;
    std::string pipeline;
    std::uint64_t seed = 0;
    PackingSequence seq;
    PackingColoring coloring;
    std::vector<int> layer_sizes;
    int e_size = 0;
    int e_prime_size = 0;
    int c_size = 0;
    int recolor_steps = 0;
    std::string escalation;
    std::string verification;
    double color_ms = -1.0;   // negative = omitted
    double verify_ms = -1.0;

    static ColoringReport build(const Graph& g, const std::string& pipeline, std::uint64_t seed,
                                const PipelineResult& result);
};

std::string report_to_json(const ColoringReport& report);
ColoringReport report_from_json(const std::string& text);

// DOT export of a colored graph; class labels become node labels.
std::string to_dot(const Graph& g, const PackingColoring& coloring);

}  // namespace packpaint
