#include "packpaint/mis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace packpaint {

namespace {

// splitmix64; portable seeded tie-breaking without stdlib distributions.
struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

std::vector<int> seeded_permutation(int n, std::uint64_t seed) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    SplitMix rng{seed ^ 0x5bf0f2b2f8dd2ac1ULL};
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[int(rng.below(i + 1))]);
    return perm;
}

std::vector<int> vertex_weights(const Graph& g, const WeightProfile& w) {
    if (!(w.heavy_weight > w.light_weight && w.light_weight > 0))
        throw std::invalid_argument("weight profile requires heavy > light > 0");
    std::vector<int> wt(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        wt[v] = (g.degree(v) == w.k) ? w.heavy_weight : w.light_weight;
    return wt;
}

long long weight_of(const Bitset& set, const std::vector<int>& wt) {
    long long sum = 0;
    set.for_each([&](int v) { sum += wt[v]; });
    return sum;
}

// Greedy seed: heavier first, then lower degree, then a seeded permutation.
void greedy_fill(const Graph& g, const Bitset& mask, const std::vector<int>& wt,
                 std::uint64_t seed, Bitset& cur) {
    auto perm = seeded_permutation(g.num_vertices(), seed);
    std::vector<int> order = mask.to_vector();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (wt[a] != wt[b]) return wt[a] > wt[b];
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return perm[a] < perm[b];
    });
    for (int v : order)
        if (!cur.test(v) && !g.neighbor_bits(v).intersects(cur)) cur.set(v);
}

// First-improvement local search. Any improving policy move (remove R, add
// A) implies the reduced move with R = N(A) & cur is improving too, so the
// scan only enumerates A (singletons, then pairs) in ascending lex order.
void improve_to_fixed_point(const Graph& g, const Bitset& mask, const std::vector<int>& wt,
                            const ExchangePolicy& policy, Bitset& cur) {
    const int n = g.num_vertices();
    if (policy.max_remove < policy.max_add || policy.max_add < 1)
        throw std::invalid_argument("exchange policy requires max_remove >= max_add >= 1");
    long long guard = 50LL * n * n + 100;

    auto removed_cost = [&](const Bitset& conflict, int bound, long long& cost) {
        int cnt = conflict.count();
        if (cnt > bound) return false;
        cost = weight_of(conflict, wt);
        return true;
    };

    bool improved = true;
    while (improved) {
        improved = false;
        for (int a = 0; a < n && !improved; ++a) {
            if (!mask.test(a) || cur.test(a)) continue;
            Bitset conflict = g.neighbor_bits(a);
            conflict &= cur;
            long long cost;
            if (removed_cost(conflict, policy.max_remove, cost) && wt[a] > cost) {
                cur.subtract(conflict);
                cur.set(a);
                improved = true;
                break;
            }
            if (policy.max_add < 2) continue;
            for (int b = a + 1; b < n; ++b) {
                if (!mask.test(b) || cur.test(b) || g.adjacent(a, b)) continue;
                Bitset conflict2 = g.neighbor_bits(a);
                conflict2 |= g.neighbor_bits(b);
                conflict2 &= cur;
                long long cost2;
                if (removed_cost(conflict2, policy.max_remove, cost2) && wt[a] + wt[b] > cost2) {
                    cur.subtract(conflict2);
                    cur.set(a);
                    cur.set(b);
                    improved = true;
                    break;
                }
            }
        }
        if (--guard < 0) throw std::logic_error("exchange_optimize exceeded its move budget");
    }
}

struct BranchAndBound {
    const Graph& g;
    const std::vector<int>& wt;
    Bitset best_set;
    long long best_phi = -1;

    void dfs(Bitset cand, Bitset cur, long long cur_phi) {
        long long bound = cur_phi + weight_of(cand, wt);
        if (bound <= best_phi) return;
        // Isolated candidates always join: positive weights.
        bool progress = true;
        while (progress) {
            progress = false;
            cand.for_each([&](int v) {
                if (!progress && !g.neighbor_bits(v).intersects(cand)) {
                    cand.reset(v);
                    cur.set(v);
                    cur_phi += wt[v];
                    progress = true;
                }
            });
        }
        if (!cand.any()) {
            if (cur_phi > best_phi) {
                best_phi = cur_phi;
                best_set = cur;
            }
            return;
        }
        int branch = -1, branch_deg = -1;
        cand.for_each([&](int v) {
            int d = g.neighbor_bits(v).intersect_count(cand);
            if (d > branch_deg) {
                branch_deg = d;
                branch = v;
            }
        });
        Bitset include = cand;
        include.reset(branch);
        include.subtract(g.neighbor_bits(branch));
        Bitset cur_inc = cur;
        cur_inc.set(branch);
        dfs(include, cur_inc, cur_phi + wt[branch]);
        cand.reset(branch);
        dfs(cand, cur, cur_phi);
    }
};

Bitset solve_masked_exact(const Graph& g, const Bitset& mask, const std::vector<int>& wt,
                          const ExchangePolicy& policy) {
    Bitset seed(g.num_vertices());
    greedy_fill(g, mask, wt, policy.tiebreak_seed, seed);
    improve_to_fixed_point(g, mask, wt, policy, seed);
    BranchAndBound bnb{g, wt, seed, weight_of(seed, wt)};
    bnb.dfs(mask, Bitset(g.num_vertices()), 0);
    return bnb.best_set;
}

Bitset solve_masked_local(const Graph& g, const Bitset& mask, const std::vector<int>& wt,
                          const ExchangePolicy& policy, const Bitset& start) {
    Bitset cur = start;
    greedy_fill(g, mask, wt, policy.tiebreak_seed, cur);
    improve_to_fixed_point(g, mask, wt, policy, cur);
    return cur;
}

void check_independent(const Graph& g, const std::vector<int>& t, const char* who) {
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (g.adjacent(t[i], t[j]))
                throw std::invalid_argument(std::string(who) + ": set not independent, edge (" +
                                            std::to_string(t[i]) + "," + std::to_string(t[j]) +
                                            ")");
}

}  // namespace

void LayeredFamily::index_fathers(const Graph& g) {
    std::vector<char> in_layer(g.num_vertices(), 0);
    for (const auto& layer : layers)
        for (int v : layer) in_layer[v] = 1;
    residual.clear();
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!in_layer[v]) residual.push_back(v);
    residual_pos_.assign(g.num_vertices(), -1);
    for (int i = 0; i < int(residual.size()); ++i) residual_pos_[residual[i]] = i;

    std::vector<int> layer_of(g.num_vertices(), -1);
    for (int li = 0; li < int(layers.size()); ++li)
        for (int v : layers[li]) layer_of[v] = li;
    fathers.assign(residual.size(), std::vector<std::vector<int>>(layers.size()));
    for (int i = 0; i < int(residual.size()); ++i)
        for (int u : g.neighbors(residual[i]))
            if (layer_of[u] >= 0) fathers[i][layer_of[u]].push_back(u);
}

int LayeredFamily::residual_index(int v) const {
    if (v < 0 || v >= int(residual_pos_.size())) return -1;
    return residual_pos_[v];
}

long long phi(const Graph& g, const std::vector<int>& t, const WeightProfile& w) {
    check_independent(g, t, "phi");
    auto wt = vertex_weights(g, w);
    long long sum = 0;
    for (int v : t) sum += wt[v];
    return sum;
}

std::vector<int> exchange_optimize(const Graph& g, const WeightProfile& w,
                                   const ExchangePolicy& policy, const std::vector<int>& start) {
    check_independent(g, start, "exchange_optimize");
    auto wt = vertex_weights(g, w);
    Bitset mask(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) mask.set(v);
    Bitset cur(g.num_vertices());
    for (int v : start) cur.set(v);
    return solve_masked_local(g, mask, wt, policy, cur).to_vector();
}

std::pair<std::vector<int>, long long> exact_mwis(const Graph& g, const WeightProfile& w,
                                                  int vertex_cap) {
    if (g.num_vertices() > vertex_cap)
        throw std::invalid_argument("exact_mwis: " + std::to_string(g.num_vertices()) +
                                    " vertices exceeds cap " + std::to_string(vertex_cap));
    auto wt = vertex_weights(g, w);
    Bitset mask(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) mask.set(v);
    Bitset best = solve_masked_exact(g, mask, wt, ExchangePolicy{});
    return {best.to_vector(), weight_of(best, wt)};
}

LayeredFamily build_layers(const Graph& g, int m, const WeightProfile& w,
                           const ExchangePolicy& policy, bool use_exact) {
    if (m < 1) throw std::invalid_argument("build_layers requires m >= 1");
    auto wt = vertex_weights(g, w);
    Bitset mask(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) mask.set(v);

    LayeredFamily fam;
    fam.k = w.k;
    for (int i = 0; i < m; ++i) {
        Bitset layer = use_exact
                           ? solve_masked_exact(g, mask, wt, policy)
                           : solve_masked_local(g, mask, wt, policy, Bitset(g.num_vertices()));
        fam.layers.push_back(layer.to_vector());
        mask.subtract(layer);
        // Every vertex still uncovered must see this layer, else adding it
        // would have improved the layer's phi.
        bool covered = true;
        mask.for_each([&](int v) {
            if (!g.neighbor_bits(v).intersects(layer)) covered = false;
        });
        if (!covered)
            throw std::logic_error("build_layers: uncovered vertex after layer " +
                                   std::to_string(i + 1));
    }
    fam.index_fathers(g);
    return fam;
}

int theta(const Graph& g, const LayeredFamily& fam) {
    std::vector<char> in_layer(g.num_vertices(), 0);
    for (const auto& layer : fam.layers)
        for (int v : layer) in_layer[v] = 1;
    int count = 0;
    for (auto [u, v] : g.edges())
        if (in_layer[u] != in_layer[v]) ++count;
    return count;
}

namespace {

// State for the lexicographic (maximize |S|, minimize theta) search.
struct BalancedState {
    const Graph& g;
    int m;
    std::vector<int> layer_of;  // -1 = residual

    explicit BalancedState(const Graph& graph, int layers)
        : g(graph), m(layers), layer_of(graph.num_vertices(), -1) {}

    bool fits(int v, int t) const {
        for (int u : g.neighbors(v))
            if (layer_of[u] == t) return false;
        return true;
    }

    std::vector<int> conflicts(int v, int t) const {
        std::vector<int> out;
        for (int u : g.neighbors(v))
            if (layer_of[u] == t) out.push_back(u);
        return out;
    }

    int family_size() const {
        int s = 0;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (layer_of[v] >= 0) ++s;
        return s;
    }

    int theta_value() const {
        int count = 0;
        for (auto [u, v] : g.edges())
            if ((layer_of[u] >= 0) != (layer_of[v] >= 0)) ++count;
        return count;
    }

    // Lowest layer other than `avoid` that v fits into, or -1.
    int relocation_target(int v, int avoid) const {
        for (int t = 0; t < m; ++t)
            if (t != avoid && fits(v, t)) return t;
        return -1;
    }
};

// Single additions: residual vertex into a conflict-free layer.
bool move_add(BalancedState& st) {
    for (int v = 0; v < st.g.num_vertices(); ++v) {
        if (st.layer_of[v] != -1) continue;
        for (int t = 0; t < st.m; ++t)
            if (st.fits(v, t)) {
                st.layer_of[v] = t;
                return true;
            }
    }
    return false;
}

// Moves u out of its layer into any other, pushing at most `depth` further
// single-blocker relocations ahead of it. Leaves the state mutated on
// success; the caller snapshots and rolls back around the whole move.
bool relocate_away(BalancedState& st, int u, int depth) {
    const int from = st.layer_of[u];
    for (int t2 = 0; t2 < st.m; ++t2) {
        if (t2 == from) continue;
        auto blockers = st.conflicts(u, t2);
        if (blockers.empty()) {
            st.layer_of[u] = t2;
            return true;
        }
        if (depth > 0 && blockers.size() == 1) {
            auto snapshot = st.layer_of;
            st.layer_of[u] = -2;  // off the board while the chain unwinds
            if (relocate_away(st, blockers[0], depth - 1) && st.fits(u, t2)) {
                st.layer_of[u] = t2;
                return true;
            }
            st.layer_of = snapshot;
        }
    }
    return false;
}

// Add v to layer t after relocating its one or two conflicts elsewhere,
// each allowed a short relocation chain.
bool move_add_with_relocation(BalancedState& st) {
    for (int v = 0; v < st.g.num_vertices(); ++v) {
        if (st.layer_of[v] != -1) continue;
        for (int t = 0; t < st.m; ++t) {
            auto blockers = st.conflicts(v, t);
            if (blockers.empty() || int(blockers.size()) > 2) continue;
            auto snapshot = st.layer_of;
            bool ok = true;
            for (int u : blockers)
                if (!relocate_away(st, u, 2)) {
                    ok = false;
                    break;
                }
            if (ok && st.fits(v, t)) {
                st.layer_of[v] = t;
                return true;
            }
            st.layer_of = snapshot;
        }
    }
    return false;
}

// Two residual vertices into one layer, evicting their single blocker.
bool move_pair_add(BalancedState& st) {
    for (int v = 0; v < st.g.num_vertices(); ++v) {
        if (st.layer_of[v] != -1) continue;
        for (int w = v + 1; w < st.g.num_vertices(); ++w) {
            if (st.layer_of[w] != -1 || st.g.adjacent(v, w)) continue;
            for (int t = 0; t < st.m; ++t) {
                auto bv = st.conflicts(v, t);
                auto bw = st.conflicts(w, t);
                std::vector<int> blockers = bv;
                for (int u : bw)
                    if (std::find(blockers.begin(), blockers.end(), u) == blockers.end())
                        blockers.push_back(u);
                if (blockers.size() != 1) continue;
                st.layer_of[blockers[0]] = -1;
                st.layer_of[v] = t;
                st.layer_of[w] = t;
                return true;
            }
        }
    }
    return false;
}

// Maximal alternating residual/layer-t path with both ends residual: swap
// its layer vertices out and its residual vertices in; size grows by one.
bool move_alternating_path(BalancedState& st) {
    const int n = st.g.num_vertices();
    for (int t = 0; t < st.m; ++t) {
        std::vector<int> father_count(n, 0);
        for (int v = 0; v < n; ++v) {
            if (st.layer_of[v] != -1) continue;
            for (int u : st.g.neighbors(v))
                if (st.layer_of[u] == t) ++father_count[v];
        }
        for (int start = 0; start < n; ++start) {
            if (st.layer_of[start] != -1 || father_count[start] != 1) continue;
            // DFS over alternating extensions. A frame holds the residual
            // vertex res_in followed on the path by layer vertex lay; the
            // path is start, stack[0].lay, stack[1].res_in, stack[1].lay, ...
            // Interior residual vertices must have exactly two t-fathers,
            // both of which end up on the path.
            struct Frame {
                int res_in;
                int lay;
                std::size_t child_idx;
            };
            int u0 = -1;
            for (int u : st.g.neighbors(start))
                if (st.layer_of[u] == t) u0 = u;
            if (u0 < 0) continue;
            std::vector<char> on_path(n, 0);
            on_path[start] = 1;
            on_path[u0] = 1;
            std::vector<Frame> stack{{start, u0, 0}};
            int steps = 0;
            while (!stack.empty() && steps < 4096) {
                ++steps;
                Frame& f = stack.back();
                const auto& nb = st.g.neighbors(f.lay);
                if (f.child_idx >= nb.size()) {
                    on_path[f.lay] = 0;
                    if (f.res_in != start) on_path[f.res_in] = 0;
                    stack.pop_back();
                    continue;
                }
                int y = nb[f.child_idx++];
                if (st.layer_of[y] != -1 || on_path[y]) continue;
                if (father_count[y] == 1) {
                    // Both path ends residual: candidate swap.
                    std::vector<int> xs, us;
                    for (const Frame& fr : stack) {
                        xs.push_back(fr.res_in);
                        us.push_back(fr.lay);
                    }
                    xs.push_back(y);
                    bool independent = true;
                    for (std::size_t i = 0; i < xs.size() && independent; ++i)
                        for (std::size_t j = i + 1; j < xs.size(); ++j)
                            if (st.g.adjacent(xs[i], xs[j])) {
                                independent = false;
                                break;
                            }
                    if (independent && us.size() >= 2) {
                        for (int u : us) st.layer_of[u] = -1;
                        for (int x : xs) st.layer_of[x] = t;
                        return true;
                    }
                    continue;
                }
                if (father_count[y] != 2) continue;
                int next_u = -1;
                for (int u : st.g.neighbors(y))
                    if (st.layer_of[u] == t && u != f.lay) next_u = u;
                if (next_u < 0 || on_path[next_u]) continue;
                on_path[y] = 1;
                on_path[next_u] = 1;
                stack.push_back({y, next_u, 0});
            }
        }
    }
    return false;
}

// Plateau swaps that keep |S| and strictly lower theta: bring v in, evict
// one blocker (possibly relocating the other).
bool move_theta_swap(BalancedState& st) {
    int theta_now = st.theta_value();
    for (int v = 0; v < st.g.num_vertices(); ++v) {
        if (st.layer_of[v] != -1) continue;
        for (int t = 0; t < st.m; ++t) {
            auto blockers = st.conflicts(v, t);
            if (blockers.empty() || int(blockers.size()) > 2) continue;
            if (blockers.size() == 1) {
                int u = blockers[0];
                st.layer_of[u] = -1;
                st.layer_of[v] = t;
                if (st.theta_value() < theta_now) return true;
                st.layer_of[v] = -1;
                st.layer_of[u] = t;
                continue;
            }
            for (int keep = 0; keep < 2; ++keep) {
                int relocated = blockers[keep], evicted = blockers[1 - keep];
                int t2 = st.relocation_target(relocated, t);
                if (t2 < 0) continue;
                st.layer_of[relocated] = t2;
                st.layer_of[evicted] = -1;
                st.layer_of[v] = t;
                if (st.theta_value() < theta_now) return true;
                st.layer_of[v] = -1;
                st.layer_of[evicted] = t;
                st.layer_of[relocated] = t;
            }
        }
    }
    return false;
}

}  // namespace

LayeredFamily build_balanced_family(const Graph& g, int m, const ExchangePolicy& policy) {
    const int n = g.num_vertices();
    if (m < 1) throw std::invalid_argument("build_balanced_family requires m >= 1");
    if (n < m)
        throw std::invalid_argument("build_balanced_family: cannot seed " + std::to_string(m) +
                                    " nonempty layers from " + std::to_string(n) + " vertices");

    BalancedState st(g, m);
    // First-fit seed in a seeded order, then fix any empty layers by
    // stealing from layers with two or more vertices.
    for (int v : seeded_permutation(n, policy.tiebreak_seed)) {
        for (int t = 0; t < m; ++t)
            if (st.fits(v, t)) {
                st.layer_of[v] = t;
                break;
            }
    }
    std::vector<int> sizes(m, 0);
    for (int v = 0; v < n; ++v)
        if (st.layer_of[v] >= 0) ++sizes[st.layer_of[v]];
    for (int t = 0; t < m; ++t) {
        if (sizes[t] > 0) continue;
        bool fixed = false;
        for (int v = 0; v < n && !fixed; ++v) {
            int from = st.layer_of[v];
            if (from >= 0 && sizes[from] >= 2) {
                st.layer_of[v] = t;
                --sizes[from];
                ++sizes[t];
                fixed = true;
            }
        }
        if (!fixed) throw std::logic_error("build_balanced_family: could not seed layer");
    }

    const long long move_cap = 50LL * n * n + 100;
    long long moves = 0;
    while (true) {
        if (move_add(st) || move_add_with_relocation(st) || move_pair_add(st) ||
            (policy.allow_alternating_paths && move_alternating_path(st)) ||
            move_theta_swap(st)) {
            if (++moves > move_cap)
                throw std::logic_error("build_balanced_family exceeded its move budget");
            continue;
        }
        break;
    }

    LayeredFamily fam;
    fam.k = degree_profile(g).k;
    fam.layers.assign(m, {});
    for (int v = 0; v < n; ++v)
        if (st.layer_of[v] >= 0) fam.layers[st.layer_of[v]].push_back(v);
    for (const auto& layer : fam.layers)
        if (layer.empty()) throw std::logic_error("build_balanced_family: empty layer at return");
    fam.index_fathers(g);
    // Fixed point of single additions: every residual vertex has a father
    // in every layer.
    for (int i = 0; i < int(fam.residual.size()); ++i)
        for (int t = 0; t < m; ++t)
            if (fam.fathers[i][t].empty())
                throw std::logic_error("build_balanced_family: residual vertex " +
                                       std::to_string(fam.residual[i]) + " has no " +
                                       std::to_string(t + 1) + "-father");
    return fam;
}

}  // namespace packpaint
