#include "packpaint/graph.hpp"

#include <algorithm>
#include <deque>

namespace packpaint {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") not allowed");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.bits_.assign(n, Bitset(n));
    g.m_ = 0;
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj_[v];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        for (int u : nb) g.bits_[v].set(u);
        g.m_ += int(nb.size());
    }
    g.m_ /= 2;
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    return bfs_distances_bounded(g, src, g.num_vertices());
}

std::vector<int> bfs_distances_bounded(const Graph& g, int src, int max_depth) {
    if (src < 0 || src >= g.num_vertices())
        throw std::invalid_argument("bfs source out of range");
    std::vector<int> dist(g.num_vertices(), kUnreachable);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] >= max_depth) continue;
        for (int v : g.neighbors(u)) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

Graph power_graph(const Graph& g, int d) {
    if (d < 1) throw std::invalid_argument("power_graph requires d >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.num_vertices(); ++u) {
        auto dist = bfs_distances_bounded(g, u, d);
        for (int v = u + 1; v < g.num_vertices(); ++v)
            if (dist[v] != kUnreachable && dist[v] <= d) edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(g.num_vertices(), edges);
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.per_vertex_degrees.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        p.per_vertex_degrees[v] = g.degree(v);
        p.k = std::max(p.k, g.degree(v));
    }
    p.saturation = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) != p.k) continue;
        int heavy_neighbors = 0;
        for (int u : g.neighbors(v))
            if (g.degree(u) == p.k) ++heavy_neighbors;
        p.saturation = std::max(p.saturation, heavy_neighbors);
    }
    return p;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    InducedSubgraph out;
    out.to_original = s;
    std::sort(out.to_original.begin(), out.to_original.end());
    out.to_original.erase(std::unique(out.to_original.begin(), out.to_original.end()),
                          out.to_original.end());
    out.to_sub.assign(g.num_vertices(), -1);
    for (int i = 0; i < int(out.to_original.size()); ++i) {
        int v = out.to_original[i];
        if (v < 0 || v >= g.num_vertices())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        out.to_sub[v] = i;
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < int(out.to_original.size()); ++i)
        for (int u : g.neighbors(out.to_original[i]))
            if (out.to_sub[u] > i) edges.emplace_back(i, out.to_sub[u]);
    out.graph = Graph::from_edge_list(int(out.to_original.size()), edges);
    return out;
}

PathDecomposition maximal_paths(const Graph& g) {
    const int n = g.num_vertices();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 2)
            throw GraphStructureError("maximal_paths: vertex of degree > 2", v);

    PathDecomposition out;
    std::vector<char> visited(n, 0);
    for (int v = 0; v < n; ++v) {
        if (visited[v]) continue;
        if (g.degree(v) == 0) {
            visited[v] = 1;
            out.isolated.push_back(v);
            continue;
        }
        if (g.degree(v) != 1) continue;  // walk only from path ends
        std::vector<int> path{v};
        visited[v] = 1;
        int prev = -1, cur = v;
        while (true) {
            int next = -1;
            for (int u : g.neighbors(cur))
                if (u != prev) next = u;
            if (next == -1) break;
            visited[next] = 1;
            path.push_back(next);
            prev = cur;
            cur = next;
        }
        if (path.back() > path.front()) {
            // already oriented from the smaller end
        } else {
            std::reverse(path.begin(), path.end());
        }
        out.paths.push_back(std::move(path));
    }
    for (int v = 0; v < n; ++v)
        if (!visited[v]) throw GraphStructureError("maximal_paths: cycle detected", v);
    std::sort(out.paths.begin(), out.paths.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

namespace {

void extend_cliques(const Graph& g, int r, std::vector<int>& clique,
                    const std::vector<int>& candidates, std::vector<std::vector<int>>& out) {
    if (int(clique.size()) == r) {
        out.push_back(clique);
        return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        int v = candidates[i];
        // remaining candidates after v that are adjacent to v
        std::vector<int> next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
        if (int(clique.size()) + 1 + int(next.size()) < r) continue;
        clique.push_back(v);
        extend_cliques(g, r, clique, next, out);
        clique.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> cliques_of_size(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("cliques_of_size requires r >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> all(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
    std::vector<int> clique;
    extend_cliques(g, r, clique, all, out);
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (seen[v]) continue;
        std::vector<int> comp;
        std::deque<int> queue{v};
        seen[v] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace packpaint
