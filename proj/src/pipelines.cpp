#include "packpaint/pipelines.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "packpaint/brooks.hpp"
#include "packpaint/exact.hpp"
#include "packpaint/verify.hpp"

namespace packpaint {

std::string to_string(Escalation e) {
    switch (e) {
        case Escalation::LocalSearch: return "local-search";
        case Escalation::ExactLayers: return "exact-layers";
        case Escalation::ExactSolver: return "exact-solver";
    }
    return "?";
}

namespace {

constexpr int kExactLayerCap = 40;

// A structural claim failed mid-construction: abort this rung and let the
// driver escalate. Never surfaces to callers.
struct ConstructionAbort : std::runtime_error {
    ConstructionAbort(const std::string& what, std::vector<int> w = {})
        : std::runtime_error(what), witness(std::move(w)) {}
    std::vector<int> witness;
};

// Per-component result in the fixed class frame of its pipeline: n_ones
// 1-classes plus n_extras classes of one extra parameter.
struct ComponentOutcome {
    std::vector<std::vector<int>> ones;
    std::vector<std::vector<int>> extras;
    LayeredFamily layers;
    std::vector<std::pair<std::vector<int>, PathType>> path_types;
    std::vector<int> E, E_prime, C;
    std::vector<RecolorStep> recolor_log;
    Escalation escalation = Escalation::LocalSearch;
};

std::vector<int> complement_of(const Graph& g, const std::vector<int>& set) {
    std::vector<char> in(g.num_vertices(), 0);
    for (int v : set) in[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!in[v]) out.push_back(v);
    return out;
}

void check_independent_or_abort(const Graph& g, const std::vector<int>& set, const char* what) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.adjacent(set[i], set[j]))
                throw ConstructionAbort(std::string(what) + " not independent",
                                        {set[i], set[j]});
}

// Pairwise distance >= min_dist among members, else abort.
void check_spread_or_abort(const Graph& g, const std::vector<int>& set, int min_dist,
                           const char* what) {
    for (int u : set) {
        auto dist = bfs_distances_bounded(g, u, min_dist - 1);
        for (int v : set) {
            if (v <= u) continue;
            if (dist[v] != kUnreachable && dist[v] < min_dist)
                throw ConstructionAbort(std::string(what) + " too close (dist " +
                                            std::to_string(dist[v]) + ")",
                                        {u, v});
        }
    }
}

// Subgraph of the square graph induced on `verts` (distance <= 2 in g).
InducedSubgraph square_on(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> in(g.num_vertices(), 0);
    for (int v : verts) in[v] = 1;
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> pos(g.num_vertices(), -1);
    for (int i = 0; i < int(sorted.size()); ++i) pos[sorted[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (int u : sorted) {
        auto dist = bfs_distances_bounded(g, u, 2);
        for (int v : sorted)
            if (v > u && dist[v] != kUnreachable && dist[v] <= 2)
                edges.emplace_back(pos[u], pos[v]);
    }
    InducedSubgraph out;
    out.graph = Graph::from_edge_list(int(sorted.size()), edges);
    out.to_original = sorted;
    out.to_sub = pos;
    return out;
}

// ---------------------------------------------------------------------------
// The saturation-specific constructions, one connected component at a time.
// `h` is the component as its own graph; degrees in h equal degrees in the
// input graph, so k-vertex tests stay valid.
// ---------------------------------------------------------------------------

ComponentOutcome attempt_zero(const Graph& h, int k, std::uint64_t seed, bool exact_layers) {
    ExchangePolicy pol;
    pol.tiebreak_seed = seed;
    auto w = weights_53(k);
    std::vector<int> S = exact_layers ? exact_mwis(h, w, kExactLayerCap).first
                                      : exchange_optimize(h, w, pol);
    std::vector<int> sbar = complement_of(h, S);

    auto sub = induced_subgraph(h, sbar);
    for (int i = 0; i < sub.graph.num_vertices(); ++i)
        if (sub.graph.degree(i) > k - 2)
            throw ConstructionAbort("residual degree exceeds k-2", {sub.to_original[i]});

    // One non-k vertex per K_{k-1} of G[Sbar]; the cliques are disjoint.
    auto cliques = cliques_of_size(sub.graph, k - 1);
    std::vector<char> seen(h.num_vertices(), 0);
    std::vector<int> C;
    for (const auto& clique : cliques) {
        int chosen = -1;
        for (int i : clique) {
            int v = sub.to_original[i];
            if (seen[v]) throw ConstructionAbort("overlapping (k-1)-cliques in residual", {v});
            seen[v] = 1;
            if (chosen == -1 && h.degree(v) < k) chosen = v;
        }
        if (chosen == -1)
            throw ConstructionAbort("(k-1)-clique made of k-vertices in 0-saturated graph");
        C.push_back(chosen);
    }

    std::vector<char> in_C(h.num_vertices(), 0);
    for (int v : C) in_C[v] = 1;
    auto remaining = [&]() {
        std::vector<int> out;
        for (int v : sbar)
            if (!in_C[v]) out.push_back(v);
        return out;
    };

    // Brooks' bound leaves odd cycles uncovered when the budget is 2 (k=4);
    // move one non-k vertex of each such cycle into C and recheck spread.
    if (k - 2 == 2) {
        auto rem_sub = induced_subgraph(h, remaining());
        for (const auto& comp : connected_components(rem_sub.graph)) {
            bool cycle = comp.size() >= 3 && (comp.size() % 2 == 1);
            for (int i : comp)
                if (rem_sub.graph.degree(i) != 2) cycle = false;
            if (!cycle) continue;
            int chosen = -1;
            for (int i : comp) {
                int v = rem_sub.to_original[i];
                if (h.degree(v) < k) {
                    chosen = v;
                    break;
                }
            }
            if (chosen == -1)
                throw ConstructionAbort("odd residual cycle made of k-vertices");
            in_C[chosen] = 1;
            C.push_back(chosen);
        }
        std::sort(C.begin(), C.end());
    }

    auto rem = remaining();
    auto rem_sub = induced_subgraph(h, rem);
    auto brooks = brooks_color(rem_sub.graph, k - 2);
    if (std::holds_alternative<BrooksObstruction>(brooks)) {
        auto& obs = std::get<BrooksObstruction>(brooks);
        std::vector<int> witness;
        for (int i : obs.component) witness.push_back(rem_sub.to_original[i]);
        throw ConstructionAbort("Brooks obstruction on residual minus C", witness);
    }
    check_spread_or_abort(h, C, 4, "3-class pair");

    ComponentOutcome out;
    out.ones.assign(k - 1, {});
    out.extras.assign(1, {});
    const auto& coloring = std::get<ProperColoring>(brooks);
    for (int i = 0; i < rem_sub.graph.num_vertices(); ++i)
        out.ones[coloring.assignment[i]].push_back(rem_sub.to_original[i]);
    out.ones[k - 2] = S;
    out.extras[0] = C;
    out.C = C;
    out.layers.layers = {S};
    out.layers.k = k;
    out.layers.index_fathers(h);
    return out;
}

// Path classification for the mid-saturation construction.
PathType classify_mid_path(const Graph& h, int k, const std::vector<int>& path) {
    int len = int(path.size()) - 1;
    if (len > 2) throw ConstructionAbort("residual path longer than 2", path);
    if (len == 1) {
        int da = h.degree(path[0]), db = h.degree(path[1]);
        if (da == k - 1 && db == k - 1) return PathType::P1;
        if ((da == k && db == k - 1) || (da == k - 1 && db == k)) return PathType::P2;
        if (da == k && db == k) return PathType::P3;
        throw ConstructionAbort("length-1 residual path with a low-degree end", path);
    }
    if (h.degree(path[1]) != k)
        throw ConstructionAbort("interior of residual 2-path is not a k-vertex", path);
    if (h.degree(path[0]) != k - 1 || h.degree(path[2]) != k - 1)
        throw ConstructionAbort("end of residual 2-path is not a (k-1)-vertex", path);
    return PathType::P4;
}

ComponentOutcome attempt_mid(const Graph& h, int k, std::uint64_t seed, bool exact_layers) {
    ExchangePolicy pol;
    pol.tiebreak_seed = seed;
    LayeredFamily fam = build_layers(h, k - 2, weights_53(k), pol, exact_layers);

    auto sub = induced_subgraph(h, fam.residual);
    auto pd = maximal_paths(sub.graph);  // throws GraphStructureError on a cycle

    ComponentOutcome out;
    out.ones.assign(k - 1, {});
    out.extras.assign(1, {});
    std::vector<int> E;
    for (int i : pd.isolated) E.push_back(sub.to_original[i]);
    for (const auto& p : pd.paths) {
        std::vector<int> path;
        for (int i : p) path.push_back(sub.to_original[i]);
        PathType type = classify_mid_path(h, k, path);
        switch (type) {
            case PathType::P1:
            case PathType::P3:
                E.push_back(std::min(path.front(), path.back()));
                break;
            case PathType::P2:
                E.push_back(h.degree(path.front()) == k ? path.front() : path.back());
                break;
            case PathType::P4:
                E.push_back(path.front());
                E.push_back(path.back());
                break;
            default: throw ConstructionAbort("unexpected path type");
        }
        out.path_types.emplace_back(path, type);
    }
    std::sort(E.begin(), E.end());
    std::vector<char> in_E(h.num_vertices(), 0);
    for (int v : E) in_E[v] = 1;
    std::vector<int> eprime;
    for (int v : fam.residual)
        if (!in_E[v]) eprime.push_back(v);

    check_independent_or_abort(h, E, "E");
    check_independent_or_abort(h, eprime, "E'");
    check_spread_or_abort(h, eprime, 3, "2-class pair");

    for (int i = 0; i < k - 2; ++i) out.ones[i] = fam.layers[i];
    out.ones[k - 2] = E;
    out.extras[0] = eprime;
    out.E = E;
    out.E_prime = eprime;
    out.layers = std::move(fam);
    return out;
}

ComponentOutcome attempt_high(const Graph& h, int k, std::uint64_t seed, bool exact_layers) {
    ExchangePolicy pol;
    pol.tiebreak_seed = seed;
    LayeredFamily fam = build_layers(h, k - 2, weights_52(k), pol, exact_layers);

    auto sub = induced_subgraph(h, fam.residual);
    auto pd = maximal_paths(sub.graph);

    ComponentOutcome out;
    out.ones.assign(k - 1, {});
    out.extras.assign(k - 1, {});

    std::vector<int> E;
    for (int i : pd.isolated) E.push_back(sub.to_original[i]);
    for (const auto& p : pd.paths) {
        std::vector<int> path;
        for (int i : p) path.push_back(sub.to_original[i]);
        int len = int(path.size()) - 1;
        if (len > 3) throw ConstructionAbort("residual path longer than 3", path);
        for (int idx = 1; idx < len; ++idx)
            if (h.degree(path[idx]) != k)
                throw ConstructionAbort("interior of residual path is not a k-vertex", path);
        if (len == 1) {
            // one vertex, the degree-k end when there is one
            int a = path[0], b = path[1];
            bool ka = h.degree(a) == k, kb = h.degree(b) == k;
            if (ka && !kb)
                E.push_back(a);
            else if (kb && !ka)
                E.push_back(b);
            else
                E.push_back(std::min(a, b));
            out.path_types.emplace_back(path, PathType::Len1);
        } else if (len == 2) {
            E.push_back(path[0]);
            E.push_back(path[2]);
            out.path_types.emplace_back(path, PathType::Len2);
        } else if (len == 3) {
            if (h.degree(path[0]) != k - 1 || h.degree(path[3]) != k - 1)
                throw ConstructionAbort("end of residual 3-path is not a (k-1)-vertex", path);
            // one end plus the nonadjacent interior vertex; two valid picks,
            // take the lexicographically smaller pair
            std::vector<int> pick_a{path[0], path[2]}, pick_b{path[1], path[3]};
            std::sort(pick_a.begin(), pick_a.end());
            std::sort(pick_b.begin(), pick_b.end());
            const auto& pick = pick_a < pick_b ? pick_a : pick_b;
            E.push_back(pick[0]);
            E.push_back(pick[1]);
            out.path_types.emplace_back(path, PathType::Len3);
        }
    }
    std::sort(E.begin(), E.end());
    std::vector<char> in_E(h.num_vertices(), 0);
    for (int v : E) in_E[v] = 1;
    std::vector<int> rest;
    for (int v : fam.residual)
        if (!in_E[v]) rest.push_back(v);
    check_independent_or_abort(h, E, "E");
    check_independent_or_abort(h, rest, "residual minus E");

    // Partial 1-coloring: layer i wears color i, E wears color k-2.
    std::vector<int> col1(h.num_vertices(), -1);
    for (int i = 0; i < k - 2; ++i)
        for (int v : fam.layers[i]) col1[v] = i;
    for (int v : E) col1[v] = k - 2;

    // Recoloring sweep to a fixpoint: an uncolored x takes 1-color i once
    // every neighbor wearing i can step to a spare 1-color. Goodness is
    // judged against the current colors, recomputed after every change.
    auto palette_of = [&](int u) {
        std::vector<char> used(k - 1, 0);
        for (int nb : h.neighbors(u))
            if (col1[nb] >= 0) used[col1[nb]] = 1;
        return used;
    };
    std::vector<int> uncolored = rest;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = uncolored.begin(); it != uncolored.end();) {
            int x = *it;
            bool placed = false;
            for (int i = 0; i < k - 2 && !placed; ++i) {
                std::vector<int> wearers;
                for (int nb : h.neighbors(x))
                    if (col1[nb] == i) wearers.push_back(nb);
                bool all_good = true;
                std::vector<std::pair<int, int>> plan;
                for (int u : wearers) {
                    auto used = palette_of(u);
                    int free = -1;
                    for (int c = 0; c < k - 1; ++c)
                        if (c != i && !used[c]) {
                            free = c;
                            break;
                        }
                    if (free < 0) {
                        all_good = false;
                        break;
                    }
                    plan.emplace_back(u, free);
                }
                if (!all_good) continue;
                // recheck sequentially: earlier recolors may consume a color
                for (auto [u, planned] : plan) {
                    auto used = palette_of(u);
                    int free = -1;
                    for (int c = 0; c < k - 1; ++c)
                        if (c != i && !used[c]) {
                            free = c;
                            break;
                        }
                    if (free < 0) throw ConstructionAbort("recolor plan collapsed", {u});
                    out.recolor_log.push_back({u, col1[u], free});
                    col1[u] = free;
                }
                for (int nb : h.neighbors(x))
                    if (col1[nb] == i) throw ConstructionAbort("recolor left a conflict", {x, nb});
                col1[x] = i;
                placed = true;
            }
            if (placed) {
                it = uncolored.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }

    std::vector<int> eprime = uncolored;
    std::sort(eprime.begin(), eprime.end());
    auto sq = square_on(h, eprime);
    for (int i = 0; i < sq.graph.num_vertices(); ++i)
        if (sq.graph.degree(i) > k - 1)
            throw ConstructionAbort("square graph on E' has degree > k-1", {sq.to_original[i]});
    auto brooks = brooks_color(sq.graph, k - 1);
    if (std::holds_alternative<BrooksObstruction>(brooks)) {
        auto& obs = std::get<BrooksObstruction>(brooks);
        std::vector<int> witness;
        for (int i : obs.component) witness.push_back(sq.to_original[i]);
        throw ConstructionAbort("Brooks obstruction on square graph of E'", witness);
    }
    const auto& sq_col = std::get<ProperColoring>(brooks);
    for (int i = 0; i < sq.graph.num_vertices(); ++i)
        out.extras[sq_col.assignment[i]].push_back(sq.to_original[i]);

    for (int v = 0; v < h.num_vertices(); ++v)
        if (col1[v] >= 0) out.ones[col1[v]].push_back(v);
    out.E = E;
    out.E_prime = eprime;
    out.layers = std::move(fam);
    return out;
}

ComponentOutcome attempt_general(const Graph& h, int k, std::uint64_t seed, bool exact_layers) {
    const int m = k - 1;
    ComponentOutcome out;
    out.ones.assign(m, {});
    out.extras.assign(k, {});
    if (h.num_vertices() < m) {
        // Tiny component: one singleton 1-class per vertex.
        out.layers.layers.assign(m, {});
        for (int v = 0; v < h.num_vertices(); ++v) {
            out.ones[v] = {v};
            out.layers.layers[v] = {v};
        }
        out.layers.k = k;
        out.layers.index_fathers(h);
        return out;
    }
    ExchangePolicy pol;
    pol.tiebreak_seed = seed + (exact_layers ? 0x9e37ULL : 0);
    LayeredFamily fam = build_balanced_family(h, m, pol);

    for (int v : fam.residual)
        if (h.degree(v) < k - 1)
            throw ConstructionAbort("residual vertex of degree below k-1", {v});

    auto sq = square_on(h, fam.residual);
    for (int i = 0; i < sq.graph.num_vertices(); ++i)
        if (sq.graph.degree(i) > k)
            throw ConstructionAbort("square graph on residual has degree > k",
                                    {sq.to_original[i]});
    auto brooks = brooks_color(sq.graph, k);
    if (std::holds_alternative<BrooksObstruction>(brooks)) {
        auto& obs = std::get<BrooksObstruction>(brooks);
        std::vector<int> witness;
        for (int i : obs.component) witness.push_back(sq.to_original[i]);
        throw ConstructionAbort("Brooks obstruction on square graph of residual", witness);
    }
    const auto& sq_col = std::get<ProperColoring>(brooks);
    for (int i = 0; i < sq.graph.num_vertices(); ++i)
        out.extras[sq_col.assignment[i]].push_back(sq.to_original[i]);
    for (int i = 0; i < m; ++i) out.ones[i] = fam.layers[i];
    out.E_prime = fam.residual;
    out.layers = std::move(fam);
    return out;
}

// ---------------------------------------------------------------------------
// Escalation driver and component merging.
// ---------------------------------------------------------------------------

ComponentOutcome escalate(const Graph& h, const PackingSequence& target, int n_ones, int n_extras,
                          int extra_s, bool has_exact_rung,
                          const std::function<ComponentOutcome(bool)>& attempt) {
    std::string first_failure;
    try {
        return attempt(false);
    } catch (const ConstructionAbort& e) {
        first_failure = e.what();
    } catch (const GraphStructureError& e) {
        first_failure = e.what();
    } catch (const std::logic_error& e) {
        first_failure = e.what();
    }
    if (has_exact_rung && h.num_vertices() <= kExactLayerCap) {
        try {
            ComponentOutcome out = attempt(true);
            out.escalation = Escalation::ExactLayers;
            return out;
        } catch (const ConstructionAbort&) {
        } catch (const GraphStructureError&) {
        } catch (const std::logic_error&) {
        }
    }
    auto dec = decide(h, target);
    if (dec.verdict == Verdict::Feasible) {
        ComponentOutcome out;
        out.escalation = Escalation::ExactSolver;
        out.ones.assign(n_ones, {});
        out.extras.assign(n_extras, {});
        int one_i = 0, ex_i = 0;
        for (const auto& cls : dec.coloring.classes) {
            if (cls.s == 1)
                out.ones[one_i++] = cls.vertices;
            else if (cls.s == extra_s)
                out.extras[ex_i++] = cls.vertices;
            else
                throw std::logic_error("solver emitted a class outside the target sequence");
        }
        out.layers.k = 0;
        out.layers.index_fathers(h);
        return out;
    }
    if (dec.verdict == Verdict::Infeasible)
        throw PipelineFailure("construction failed (" + first_failure + ") and the exact solver "
                              "certifies " + target.to_string() + " infeasible for a component");
    throw PipelineFailure("construction failed (" + first_failure +
                          ") and the exact solver timed out on " + target.to_string());
}

enum class Kind { Zero, Mid, High, General };

PipelineResult run_partitioned(const Graph& g, int k, Kind kind, std::uint64_t seed) {
    int n_ones = k - 1;
    int n_extras = 1, extra_s = 2, n_layers = 1;
    PackingSequence target;
    switch (kind) {
        case Kind::Zero:
            n_extras = 1, extra_s = 3, n_layers = 1;
            target = PackingSequence::ones_twos_threes(k - 1, 0, 1);
            break;
        case Kind::Mid:
            n_extras = 1, extra_s = 2, n_layers = k - 2;
            target = PackingSequence::ones_twos_threes(k - 1, 1);
            break;
        case Kind::High:
            n_extras = k - 1, extra_s = 2, n_layers = k - 2;
            target = PackingSequence::ones_twos_threes(k - 1, k - 1);
            break;
        case Kind::General:
            n_extras = k, extra_s = 2, n_layers = k - 1;
            target = PackingSequence::ones_twos_threes(k - 1, k);
            break;
    }

    std::vector<std::vector<int>> ones(n_ones), extras(n_extras);
    PipelineTrace trace;
    trace.layers.layers.assign(n_layers, {});
    trace.layers.k = k;

    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        const Graph& h = sub.graph;
        auto attempt = [&](bool exact_rung) {
            switch (kind) {
                case Kind::Zero: return attempt_zero(h, k, seed, exact_rung);
                case Kind::Mid: return attempt_mid(h, k, seed, exact_rung);
                case Kind::High: return attempt_high(h, k, seed, exact_rung);
                case Kind::General: return attempt_general(h, k, seed, exact_rung);
            }
            throw std::logic_error("unreachable");
        };
        bool exact_rung = kind != Kind::General;
        ComponentOutcome oc = escalate(h, target, n_ones, n_extras, extra_s, exact_rung, attempt);

        auto lift = [&](const std::vector<int>& vs) {
            std::vector<int> out;
            out.reserve(vs.size());
            for (int v : vs) out.push_back(sub.to_original[v]);
            return out;
        };
        for (int i = 0; i < n_ones; ++i) {
            auto lifted = lift(oc.ones[i]);
            ones[i].insert(ones[i].end(), lifted.begin(), lifted.end());
        }
        for (int i = 0; i < n_extras; ++i) {
            auto lifted = lift(oc.extras[i]);
            extras[i].insert(extras[i].end(), lifted.begin(), lifted.end());
        }
        for (int i = 0; i < int(oc.layers.layers.size()) && i < n_layers; ++i) {
            auto lifted = lift(oc.layers.layers[i]);
            trace.layers.layers[i].insert(trace.layers.layers[i].end(), lifted.begin(),
                                          lifted.end());
        }
        for (auto& [path, type] : oc.path_types) trace.path_types.emplace_back(lift(path), type);
        auto append = [&](std::vector<int>& dst, const std::vector<int>& src) {
            auto lifted = lift(src);
            dst.insert(dst.end(), lifted.begin(), lifted.end());
        };
        append(trace.E, oc.E);
        append(trace.E_prime, oc.E_prime);
        append(trace.C, oc.C);
        for (const auto& step : oc.recolor_log)
            trace.recolor_log.push_back(
                {sub.to_original[step.father], step.old_class, step.new_class});
        trace.escalation = std::max(trace.escalation, oc.escalation);
    }

    trace.layers.index_fathers(g);
    std::sort(trace.E.begin(), trace.E.end());
    std::sort(trace.E_prime.begin(), trace.E_prime.end());
    std::sort(trace.C.begin(), trace.C.end());

    PipelineResult result;
    result.seq = target;
    result.trace = std::move(trace);
    for (auto& cls : ones)
        if (!cls.empty()) result.coloring.classes.push_back({1, std::move(cls)});
    for (auto& cls : extras)
        if (!cls.empty()) result.coloring.classes.push_back({extra_s, std::move(cls)});
    result.coloring.normalize();

    auto check = verify(g, result.seq, result.coloring);
    if (!check.ok())
        throw std::logic_error("pipeline emitted a coloring that fails verification: " +
                               check.violations.front().describe());
    return result;
}

}  // namespace

PipelineResult color_zero_saturated(const Graph& g, std::uint64_t seed) {
    auto prof = degree_profile(g);
    if (prof.k < 3) throw std::invalid_argument("color_zero_saturated requires max degree >= 3");
    if (prof.saturation != 0)
        throw std::invalid_argument("color_zero_saturated requires a 0-saturated graph, got t=" +
                                    std::to_string(prof.saturation));
    return run_partitioned(g, prof.k, Kind::Zero, seed);
}

PipelineResult color_mid_saturated(const Graph& g, std::uint64_t seed) {
    auto prof = degree_profile(g);
    if (prof.k < 3) throw std::invalid_argument("color_mid_saturated requires max degree >= 3");
    if (prof.saturation < 1 || prof.saturation > prof.k - 2)
        throw std::invalid_argument("color_mid_saturated requires 1 <= t <= k-2, got t=" +
                                    std::to_string(prof.saturation));
    return run_partitioned(g, prof.k, Kind::Mid, seed);
}

PipelineResult color_high_saturated(const Graph& g, std::uint64_t seed) {
    auto prof = degree_profile(g);
    if (prof.k < 4) throw std::invalid_argument("color_high_saturated requires max degree >= 4");
    if (prof.saturation != prof.k - 1)
        throw std::invalid_argument("color_high_saturated requires t = k-1, got t=" +
                                    std::to_string(prof.saturation));
    return run_partitioned(g, prof.k, Kind::High, seed);
}

PipelineResult color_general(const Graph& g, std::uint64_t seed) {
    auto prof = degree_profile(g);
    if (prof.k < 3) throw std::invalid_argument("color_general requires max degree >= 3");
    return run_partitioned(g, prof.k, Kind::General, seed);
}

PipelineResult color_deg2(const Graph& g) {
    auto prof = degree_profile(g);
    if (prof.k > 2) throw std::invalid_argument("color_deg2 requires max degree <= 2");

    PipelineResult result;
    if (g.num_vertices() == 0) {
        result.seq = PackingSequence::ones_twos_threes(1, 0);
        return result;
    }

    std::vector<std::vector<int>> ones(2), twos(2);
    Escalation level = Escalation::LocalSearch;
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        const Graph& h = sub.graph;
        int nc = h.num_vertices();
        bool is_cycle = nc >= 3;
        for (int v = 0; v < nc && is_cycle; ++v)
            if (h.degree(v) != 2) is_cycle = false;

        if (!is_cycle || nc % 2 == 0) {
            // Path or even cycle: bipartition.
            auto dist = bfs_distances(h, 0);
            // paths must start the parity at an end, not at vertex 0
            if (!is_cycle) {
                int end = 0;
                for (int v = 0; v < nc; ++v)
                    if (h.degree(v) <= 1) {
                        end = v;
                        break;
                    }
                dist = bfs_distances(h, end);
            }
            for (int v = 0; v < nc; ++v) ones[dist[v] % 2].push_back(sub.to_original[v]);
            continue;
        }

        // Odd cycle: alternate two 1-classes around the cycle; the leftover
        // vertex goes greedily into the first 2-class that keeps pairwise
        // distance >= 3 (components sit infinitely far apart, so the first
        // class always works; the solver fallback covers the general form).
        std::vector<int> cyc{0};
        std::vector<char> used(nc, 0);
        used[0] = 1;
        while (int(cyc.size()) < nc) {
            int cur = cyc.back();
            for (int u : h.neighbors(cur))
                if (!used[u]) {
                    used[u] = 1;
                    cyc.push_back(u);
                    break;
                }
        }
        int leftover = sub.to_original[cyc[nc - 1]];
        auto dist = bfs_distances_bounded(g, leftover, 2);
        bool placed = false;
        for (int c = 0; c < 2 && !placed; ++c) {
            bool far_enough = true;
            for (int v : twos[c])
                if (dist[v] != kUnreachable) far_enough = false;
            if (far_enough) {
                twos[c].push_back(leftover);
                placed = true;
            }
        }
        if (placed) {
            for (int i = 0; i + 1 < nc; ++i) ones[i % 2].push_back(sub.to_original[cyc[i]]);
        } else {
            auto dec = decide(h, PackingSequence::ones_twos_threes(2, 1));
            if (dec.verdict != Verdict::Feasible)
                dec = decide(h, PackingSequence::ones_twos_threes(2, 2));
            if (dec.verdict != Verdict::Feasible)
                throw PipelineFailure("deg2 component not colorable within (1^2,2^2)");
            level = Escalation::ExactSolver;
            int one_i = 0, two_i = 0;
            for (const auto& cls : dec.coloring.classes) {
                auto& dst = cls.s == 1 ? ones[one_i++] : twos[two_i++];
                for (int v : cls.vertices) dst.push_back(sub.to_original[v]);
            }
        }
    }

    int ones_used = int(std::count_if(ones.begin(), ones.end(),
                                      [](const auto& c) { return !c.empty(); }));
    int twos_used = int(std::count_if(twos.begin(), twos.end(),
                                      [](const auto& c) { return !c.empty(); }));
    result.seq = PackingSequence::ones_twos_threes(std::max(1, ones_used), twos_used);
    for (auto& cls : ones)
        if (!cls.empty()) result.coloring.classes.push_back({1, std::move(cls)});
    for (auto& cls : twos)
        if (!cls.empty()) result.coloring.classes.push_back({2, std::move(cls)});
    result.coloring.normalize();
    result.trace.escalation = level;
    result.trace.layers.k = prof.k;
    result.trace.layers.index_fathers(g);

    auto check = verify(g, result.seq, result.coloring);
    if (!check.ok())
        throw std::logic_error("deg2 coloring fails verification: " +
                               check.violations.front().describe());
    return result;
}

PipelineResult color_auto(const Graph& g, std::uint64_t seed) {
    auto prof = degree_profile(g);
    if (prof.k <= 2) return color_deg2(g);
    int k = prof.k, t = prof.saturation;
    if (t == 0) return color_zero_saturated(g, seed);
    if (t <= k - 2) return color_mid_saturated(g, seed);
    if (t == k - 1 && k >= 4) return color_high_saturated(g, seed);
    return color_general(g, seed);
}

}  // namespace packpaint
