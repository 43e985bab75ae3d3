#include "packpaint/brooks.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace packpaint {

namespace {

int first_free_color(const Graph& g, const std::vector<int>& coloring, int v, int budget) {
    std::vector<char> taken(budget + 1, 0);
    for (int u : g.neighbors(v))
        if (coloring[u] >= 0 && coloring[u] <= budget) taken[coloring[u]] = 1;
    for (int c = 0; c <= budget; ++c)
        if (!taken[c]) return c;
    return -1;
}

// Color so every vertex has an uncolored neighbor at its turn: order by
// decreasing BFS distance from the root in order_graph, root last. Colors
// are constrained by constraint_graph (may have more edges than
// order_graph). Needs deg(root) < budget or two pre-colored root neighbors
// sharing a color.
void color_by_tree_order(const Graph& order_graph, const Graph& constraint_graph, int root,
                         std::vector<int>& coloring, int budget) {
    auto dist = bfs_distances(order_graph, root);
    std::vector<int> order;
    for (int v = 0; v < order_graph.num_vertices(); ++v)
        if (dist[v] != kUnreachable && coloring[v] == -1) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (dist[a] != dist[b]) return dist[a] > dist[b];
        return a < b;
    });
    for (int v : order) {
        int c = first_free_color(constraint_graph, coloring, v, budget - 1);
        if (c < 0) throw std::logic_error("brooks: no free color in tree order");
        coloring[v] = c;
    }
}

std::vector<int> articulation_points(const Graph& g, const std::vector<int>& comp) {
    // Standard lowlink DFS restricted to one component.
    int n = g.num_vertices();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> cuts;
    int timer = 0;
    struct Frame {
        int v, parent;
        std::size_t idx;
        int children;
        bool is_cut;
    };
    for (int start : comp) {
        if (disc[start] != -1) continue;
        std::vector<Frame> stack{{start, -1, 0, 0, false}};
        disc[start] = low[start] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.idx < nb.size()) {
                int u = nb[f.idx++];
                if (u == f.parent) continue;
                if (disc[u] == -1) {
                    disc[u] = low[u] = timer++;
                    stack.push_back({u, f.v, 0, 0, false});
                } else {
                    low[f.v] = std::min(low[f.v], disc[u]);
                }
            } else {
                bool cut = f.is_cut;
                if (f.parent == -1 && f.children > 1) cut = true;
                if (cut) cuts.push_back(f.v);
                int v = f.v, parent = f.parent;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& pf = stack.back();
                    ++pf.children;
                    low[parent] = std::min(low[parent], low[v]);
                    if (pf.parent != -1 && low[v] >= disc[parent]) pf.is_cut = true;
                }
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

bool connected_avoiding(const Graph& g, const std::vector<int>& comp, int skip1, int skip2) {
    int start = -1;
    int want = 0;
    for (int v : comp)
        if (v != skip1 && v != skip2) {
            ++want;
            if (start == -1) start = v;
        }
    if (start == -1) return true;
    std::vector<int> stack{start};
    std::vector<char> seen(g.num_vertices(), 0);
    seen[start] = 1;
    int got = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++got;
        for (int w : g.neighbors(u))
            if (!seen[w] && w != skip1 && w != skip2) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return got == want;
}

// Colors one connected component of g (given as an induced subgraph h with
// every vertex present) into `coloring`, or returns the obstruction.
std::optional<BrooksObstruction::Kind> color_component(const Graph& h, int budget,
                                                       std::vector<int>& coloring) {
    const int n = h.num_vertices();
    int delta = 0;
    long long degsum = 0;
    for (int v = 0; v < n; ++v) {
        delta = std::max(delta, h.degree(v));
        degsum += h.degree(v);
    }

    if (delta < budget) {
        // Greedy needs only delta+1 <= budget colors.
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        for (int v : order) coloring[v] = first_free_color(h, coloring, v, budget - 1);
        return std::nullopt;
    }

    // delta == budget from here on.
    bool regular = (degsum == (long long)n * delta);
    if (regular && n == delta + 1) return BrooksObstruction::Kind::Complete;
    if (regular && delta == 2) {
        // Connected 2-regular graph: a cycle. Odd cycles cannot be 2-colored.
        if (n % 2 == 1) return BrooksObstruction::Kind::OddCycle;
        auto dist = bfs_distances(h, 0);
        for (int v = 0; v < n; ++v) coloring[v] = dist[v] % 2;
        return std::nullopt;
    }

    if (!regular) {
        int root = 0;
        while (h.degree(root) == delta) ++root;
        color_by_tree_order(h, h, root, coloring, budget);
        return std::nullopt;
    }

    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    auto cuts = articulation_points(h, all);
    if (!cuts.empty()) {
        // Split at a cut vertex x; in each piece x has degree < delta, so the
        // tree order applies with root x. Pieces only meet at x, so colorings
        // merge after permuting each piece to give x color 0.
        int x = cuts.front();
        std::vector<char> seen(n, 0);
        seen[x] = 1;
        for (int s : h.neighbors(x)) {
            if (seen[s]) continue;
            std::vector<int> piece{x};
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                piece.push_back(u);
                for (int w : h.neighbors(u))
                    if (!seen[w] && w != x) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            auto sub = induced_subgraph(h, piece);
            std::vector<int> piece_col(sub.graph.num_vertices(), -1);
            color_by_tree_order(sub.graph, sub.graph, sub.to_sub[x], piece_col, budget);
            int xc = piece_col[sub.to_sub[x]];
            for (int i = 0; i < sub.graph.num_vertices(); ++i) {
                int c = piece_col[i];
                if (c == xc)
                    c = 0;
                else if (c == 0)
                    c = xc;
                if (sub.to_original[i] != x) coloring[sub.to_original[i]] = c;
            }
        }
        coloring[x] = 0;
        return std::nullopt;
    }

    // 2-connected, delta-regular, delta >= 3, not complete: find x with two
    // nonadjacent neighbors u,v whose removal keeps the graph connected.
    for (int x = 0; x < n; ++x) {
        const auto& nb = h.neighbors(x);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int u = nb[i], v = nb[j];
                if (h.adjacent(u, v)) continue;
                if (!connected_avoiding(h, all, u, v)) continue;
                coloring[u] = 0;
                coloring[v] = 0;
                // Order the rest by distance from x in h - {u,v}, x last;
                // color constraints stay those of h, so u,v block color 0
                // for their neighbors. x ends with two same-colored
                // neighbors, leaving it a free color.
                std::vector<std::pair<int, int>> edges;
                for (auto [a, b] : h.edges())
                    if (a != u && a != v && b != u && b != v) edges.emplace_back(a, b);
                Graph rest = Graph::from_edge_list(n, edges);
                color_by_tree_order(rest, h, x, coloring, budget);
                return std::nullopt;
            }
        }
    }
    throw std::logic_error("brooks: no valid (x,u,v) triple in 2-connected non-complete graph");
}

}  // namespace

BrooksResult brooks_color(const Graph& g, int budget) {
    int delta = 0;
    for (int v = 0; v < g.num_vertices(); ++v) delta = std::max(delta, g.degree(v));
    if (budget < delta)
        throw std::invalid_argument("brooks_color: budget " + std::to_string(budget) +
                                    " below max degree " + std::to_string(delta));
    if (budget == 0 && g.num_vertices() > 0)
        return BrooksObstruction{BrooksObstruction::Kind::Complete, {0}};

    std::vector<int> assignment(g.num_vertices(), -1);
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        std::vector<int> local(sub.graph.num_vertices(), -1);
        auto obstruction = color_component(sub.graph, budget, local);
        if (obstruction) return BrooksObstruction{*obstruction, comp};
        for (int i = 0; i < sub.graph.num_vertices(); ++i)
            assignment[sub.to_original[i]] = local[i];
    }

    // Compact color values to a dense prefix.
    std::vector<int> remap(budget + 1, -1);
    int used = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        int c = assignment[v];
        if (remap[c] == -1) remap[c] = used++;
    }
    ProperColoring out;
    out.assignment.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) out.assignment[v] = remap[assignment[v]];
    out.colors_used = used;
    return out;
}

ProperColoring greedy_color(const Graph& g, const std::vector<int>& order) {
    if (int(order.size()) != g.num_vertices())
        throw std::invalid_argument("greedy_color: order must be a permutation");
    std::vector<char> seen(g.num_vertices(), 0);
    for (int v : order) {
        if (v < 0 || v >= g.num_vertices() || seen[v])
            throw std::invalid_argument("greedy_color: order must be a permutation");
        seen[v] = 1;
    }
    ProperColoring out;
    out.assignment.assign(g.num_vertices(), -1);
    for (int v : order) {
        int c = first_free_color(g, out.assignment, v, g.num_vertices());
        out.assignment[v] = c;
        out.colors_used = std::max(out.colors_used, c + 1);
    }
    return out;
}

}  // namespace packpaint
