#include "packpaint/gen.hpp"

#include <algorithm>
#include <stdexcept>

namespace packpaint {

namespace {

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int bound) { return bound ? int(next() % std::uint64_t(bound)) : 0; }
};

}  // namespace

Graph gen_gkt(int k, int t) {
    if (k < 3 || t < 1 || t > k) throw std::invalid_argument("gen_gkt requires k >= 3, 1 <= t <= k");
    const int copies = t + 1;
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) edges.emplace_back(c * k + i, c * k + j);
    // Link vertex f(i,j) of copy i to f(j,i) of copy j; f(a,b) = b when
    // b < a, else b-1, so each vertex carries at most one cross edge.
    auto link = [](int a, int b) { return b < a ? b : b - 1; };
    for (int i = 0; i < copies; ++i)
        for (int j = i + 1; j < copies; ++j)
            edges.emplace_back(i * k + link(i, j), j * k + link(j, i));
    return Graph::from_edge_list(copies * k, edges);
}

Graph gen_clique_bridge(int k) {
    if (k < 3) throw std::invalid_argument("gen_clique_bridge requires k >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) edges.emplace_back(c * k + i, c * k + j);
    int middle = 2 * k;
    edges.emplace_back(0, middle);
    edges.emplace_back(k, middle);
    return Graph::from_edge_list(2 * k + 1, edges);
}

namespace {

struct EdgeBuilder {
    int n;
    std::vector<std::vector<char>> adj;
    std::vector<int> deg;

    explicit EdgeBuilder(int n_) : n(n_), adj(n_, std::vector<char>(n_, 0)), deg(n_, 0) {}

    bool has(int u, int v) const { return adj[u][v]; }
    void add(int u, int v) {
        adj[u][v] = adj[v][u] = 1;
        ++deg[u];
        ++deg[v];
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adj[u][v]) out.emplace_back(u, v);
        return out;
    }
};

// One construction attempt; empty optional on a dead end.
bool try_build_saturated(int n, int k, int t, SplitMix& rng, EdgeBuilder& b) {
    if (t == 0) {
        // Random fill with degree cap k, never letting two degree-k vertices
        // become adjacent. An edge is safe unless it pushes an endpoint to
        // degree k while the other end (or an existing neighbor) is/becomes
        // a k-vertex.
        auto safe = [&](int u, int v) {
            if (u == v || b.has(u, v) || b.deg[u] >= k || b.deg[v] >= k) return false;
            bool u_becomes = b.deg[u] + 1 == k, v_becomes = b.deg[v] + 1 == k;
            if (u_becomes && v_becomes) return false;
            if (u_becomes) {
                if (b.deg[v] + 1 == k) return false;
                for (int w = 0; w < n; ++w)
                    if (b.adj[u][w] && b.deg[w] == k) return false;
            }
            if (v_becomes) {
                for (int w = 0; w < n; ++w)
                    if (b.adj[v][w] && b.deg[w] == k) return false;
            }
            // adding to a neighbor of an existing k-vertex only raises a
            // non-k vertex; fine.
            return true;
        };
        int target = n * k / 3 + 1;
        for (int tries = 0; tries < 30 * target; ++tries) {
            int u = rng.below(n), v = rng.below(n);
            if (safe(u, v)) b.add(u, v);
        }
        // Ensure a degree-k vertex exists: raise one vertex that has no
        // k-neighbors using endpoints of degree <= k-2.
        bool have_k = false;
        for (int v = 0; v < n; ++v) have_k |= (b.deg[v] == k);
        if (!have_k) {
            for (int u = 0; u < n && !have_k; ++u) {
                bool clean = b.deg[u] < k;
                for (int w = 0; w < n && clean; ++w)
                    if (b.adj[u][w] && b.deg[w] == k) clean = false;
                if (!clean) continue;
                for (int w = 0; w < n && b.deg[u] < k; ++w)
                    if (w != u && !b.has(u, w) && b.deg[w] <= k - 2) b.add(u, w);
                have_k = (b.deg[u] == k);
            }
        }
        return have_k;
    }

    // t >= 1: plant a hub (vertex 0) with t designated k-neighbors 1..t,
    // fill randomly below degree k, then raise the planted vertices to
    // degree exactly k. Bulk fill stays below k, so the k-vertices are
    // exactly {0..t}: the hub sees t of them, and any other planted vertex
    // sees at most 1 + (t-1).
    for (int i = 1; i <= t; ++i) b.add(0, i);
    int target = n * k / 3 + 1;
    for (int tries = 0; tries < 30 * target; ++tries) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v || b.has(u, v)) continue;
        if (b.deg[u] >= k - 1 || b.deg[v] >= k - 1) continue;
        b.add(u, v);
    }
    for (int p = 0; p <= t; ++p) {
        int attempts = 0;
        while (b.deg[p] < k && attempts++ < 8 * n) {
            int z = rng.below(n);
            if (z == p || b.has(p, z)) continue;
            if (z > t) {
                if (b.deg[z] <= k - 2) b.add(p, z);
            } else if (p > 0 && z > 0) {
                // peer edge keeps saturation <= t (see above)
                if (b.deg[z] < k) b.add(p, z);
            }
        }
        // deterministic sweep if random probing stalled
        if (b.deg[p] < k) {
            for (int z = t + 1; z < n && b.deg[p] < k; ++z)
                if (!b.has(p, z) && z != p && b.deg[z] <= k - 2) b.add(p, z);
        }
        if (b.deg[p] < k && p > 0) {
            for (int z = 1; z <= t && b.deg[p] < k; ++z)
                if (z != p && !b.has(p, z) && b.deg[z] < k) b.add(p, z);
        }
        if (b.deg[p] < k) return false;
    }
    return true;
}

}  // namespace

Graph gen_random_saturated(int n, int k, int t, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("gen_random_saturated requires k >= 1");
    if (t < 0 || t > k) throw std::invalid_argument("gen_random_saturated requires 0 <= t <= k");
    if (n < k + 1)
        throw std::invalid_argument("gen_random_saturated: unachievable, need n >= k+1");

    SplitMix rng{seed * 0x9e3779b97f4a7c15ULL + (std::uint64_t(n) << 40) +
                 (std::uint64_t(k) << 20) + std::uint64_t(t)};
    const int max_attempts = 200;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        EdgeBuilder b(n);
        if (!try_build_saturated(n, k, t, rng, b)) continue;
        Graph g = Graph::from_edge_list(n, b.edges());
        auto prof = degree_profile(g);
        if (prof.k == k && prof.saturation == t) return g;
    }
    throw std::runtime_error("gen_random_saturated: no (n=" + std::to_string(n) +
                             ", k=" + std::to_string(k) + ", t=" + std::to_string(t) +
                             ") instance after " + std::to_string(max_attempts) + " attempts");
}

Graph gen_petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::from_edge_list(10, edges);
}

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("gen_path requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("gen_complete requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph named_graph(const std::string& name, int n) {
    if (name == "petersen") return gen_petersen();
    if (name == "path") return gen_path(n);
    if (name == "cycle") return gen_cycle(n);
    if (name == "complete") return gen_complete(n);
    throw std::invalid_argument("unknown graph name '" + name + "'");
}

}  // namespace packpaint
