#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "packpaint/bitset.hpp"

namespace packpaint {

// Sentinel for "no path"; never a large finite number.
inline constexpr int kUnreachable = -1;

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
// Keeps sorted adjacency lists (ordered iteration) and a bitset mirror
// (fast intersection); both built once and never mutated.
class Graph {
public:
    Graph() = default;

    // Deduplicates edges; rejects self-loops and out-of-range endpoints.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const Bitset& neighbor_bits(int v) const { return bits_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }
    bool adjacent(int u, int v) const { return bits_[u].test(v); }

    // All edges as (u,v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Bitset> bits_;
};

// Maximum degree k, saturation (max number of k-neighbors over degree-k
// vertices), and the per-vertex degree vector.
struct DegreeProfile {
    int k = 0;
    int saturation = 0;
    std::vector<int> per_vertex_degrees;
};

// Decomposition of a graph with max degree <= 2 and no cycle into maximal
// paths plus isolated vertices.
struct PathDecomposition {
    std::vector<std::vector<int>> paths;
    std::vector<int> isolated;
};

// Induced subgraph together with the index maps in both directions.
// to_original[sub id] = original id; to_sub[original id] = sub id or -1.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;
    std::vector<int> to_sub;
};

// Thrown when maximal_paths meets a cycle or a vertex of degree >= 3.
struct GraphStructureError : std::runtime_error {
    GraphStructureError(const std::string& what, int witness_vertex)
        : std::runtime_error(what), witness(witness_vertex) {}
    int witness;
};

// BFS distances from src; kUnreachable for vertices in other components.
std::vector<int> bfs_distances(const Graph& g, int src);

// BFS distances truncated at max_depth: entries beyond it are kUnreachable.
std::vector<int> bfs_distances_bounded(const Graph& g, int src, int max_depth);

// u ~ v in the result iff 1 <= dist_g(u,v) <= d. Requires d >= 1.
Graph power_graph(const Graph& g, int d);

DegreeProfile degree_profile(const Graph& g);

// Subgraph induced on s (relabeled 0..|s|-1 in ascending order of s).
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

// Requires max degree <= 2 and no cycle; paths sorted by smaller endpoint
// and listed from that end. Throws GraphStructureError otherwise.
PathDecomposition maximal_paths(const Graph& g);

// All vertex sets of size r that induce a complete subgraph, in ascending
// lexicographic order. Intended for bounded-degree graphs.
std::vector<std::vector<int>> cliques_of_size(const Graph& g, int r);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace packpaint
