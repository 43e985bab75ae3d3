#include "packpaint/exact.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "packpaint/verify.hpp"

namespace packpaint {

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
    explicit Searcher(const Graph& graph) : g(graph) {}

    const Graph& g;
    std::vector<int> params;       // class parameters, ascending
    std::vector<int> group_first;  // index of first class of same parameter
    std::vector<std::vector<Bitset>> ball_by_radius;  // radius index -> per-vertex ball
    std::vector<int> radius_of_class;    // class -> index into ball_by_radius
    std::vector<int> order;              // vertices, descending degree
    std::vector<Bitset> members;         // per class
    std::vector<int> class_size;
    std::vector<int> assignment;
    long long nodes = 0;
    long long max_nodes = 10'000'000;
    Clock::time_point deadline{};
    bool timed_out = false;

    bool class_open(std::size_t c) const {
        // Open an empty class only if it is the first empty one of its
        // parameter group: equal-parameter classes are interchangeable.
        if (class_size[c] > 0) return true;
        for (std::size_t c2 = group_first[c]; c2 < c; ++c2)
            if (class_size[c2] == 0) return false;
        return true;
    }

    bool dfs(std::size_t pos) {
        if (pos == order.size()) return true;
        if (++nodes >= max_nodes) {
            timed_out = true;
            return false;
        }
        if ((nodes & 1023) == 0 && Clock::now() > deadline) {
            timed_out = true;
            return false;
        }
        int v = order[pos];
        for (std::size_t c = 0; c < params.size(); ++c) {
            if (!class_open(c)) continue;
            const Bitset& ball = ball_by_radius[radius_of_class[c]][v];
            if (ball.intersects(members[c])) continue;
            members[c].set(v);
            ++class_size[c];
            assignment[v] = int(c);
            if (dfs(pos + 1)) return true;
            members[c].reset(v);
            --class_size[c];
            assignment[v] = -1;
            if (timed_out) return false;
        }
        return false;
    }
};

}  // namespace

DecisionResult decide(const Graph& g, const PackingSequence& seq, SearchBudget budget) {
    auto t0 = Clock::now();
    DecisionResult res;

    Searcher s(g);
    s.params = seq.expanded();
    s.max_nodes = budget.max_nodes;
    s.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                          std::chrono::duration<double>(budget.max_seconds));

    // group_first: start index of each run of equal parameters.
    s.group_first.resize(s.params.size());
    for (std::size_t i = 0; i < s.params.size(); ++i)
        s.group_first[i] = (i > 0 && s.params[i] == s.params[i - 1]) ? s.group_first[i - 1] : int(i);

    // Distance balls, one batch per distinct radius.
    std::map<int, int> radius_index;
    for (int p : s.params)
        if (!radius_index.count(p)) {
            int idx = int(s.ball_by_radius.size());
            radius_index[p] = idx;
            std::vector<Bitset> balls(g.num_vertices(), Bitset(g.num_vertices()));
            for (int v = 0; v < g.num_vertices(); ++v) {
                auto dist = bfs_distances_bounded(g, v, p);
                for (int u = 0; u < g.num_vertices(); ++u)
                    if (u != v && dist[u] != kUnreachable && dist[u] <= p) balls[v].set(u);
            }
            s.ball_by_radius.push_back(std::move(balls));
        }
    s.radius_of_class.reserve(s.params.size());
    for (int p : s.params) s.radius_of_class.push_back(radius_index[p]);

    s.order.resize(g.num_vertices());
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    s.members.assign(s.params.size(), Bitset(g.num_vertices()));
    s.class_size.assign(s.params.size(), 0);
    s.assignment.assign(g.num_vertices(), -1);

    bool found = s.dfs(0);
    res.nodes_explored = s.nodes;
    res.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (found) {
        res.verdict = Verdict::Feasible;
        for (std::size_t c = 0; c < s.params.size(); ++c) {
            if (s.class_size[c] == 0) continue;
            ColorClass cls;
            cls.s = s.params[c];
            cls.vertices = s.members[c].to_vector();
            res.coloring.classes.push_back(std::move(cls));
        }
        res.coloring.normalize();
        auto check = verify(g, seq, res.coloring);
        if (!check.ok()) throw std::logic_error("decide produced a coloring that fails verify");
    } else if (s.timed_out) {
        res.verdict = Verdict::Timeout;
    } else {
        res.verdict = Verdict::Infeasible;
    }
    return res;
}

PackingSequence FrontierPoint::sequence() const {
    if (!family || family->terms.size() != counts.size())
        throw std::logic_error("FrontierPoint without its family");
    std::map<int, int> out;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > 0) out[family->terms[i].first] += counts[i];
    return PackingSequence(std::move(out));
}

std::vector<FrontierPoint> min_sequence_search(const Graph& g, const FamilyTemplate& family,
                                               SearchBudget per_call) {
    if (family.terms.empty())
        throw std::invalid_argument("min_sequence_search requires a nonempty family");
    for (auto [s, mx] : family.terms)
        if (s < 1 || mx < 0) throw std::invalid_argument("bad family term");

    // Enumerate count tuples by total class count then lexicographically;
    // prune with monotonicity: supersets of feasible points stay feasible,
    // subsets of infeasible points stay infeasible.
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(family.terms.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == family.terms.size()) {
            tuples.push_back(cur);
            return;
        }
        for (int c = 0; c <= family.terms[i].second; ++c) {
            cur[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    std::stable_sort(tuples.begin(), tuples.end(), [](const auto& a, const auto& b) {
        int sa = std::accumulate(a.begin(), a.end(), 0);
        int sb = std::accumulate(b.begin(), b.end(), 0);
        if (sa != sb) return sa < sb;
        return a < b;
    });

    auto leq = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };

    std::vector<FrontierPoint> frontier;
    std::vector<std::vector<int>> infeasible;
    std::vector<FrontierPoint> timeouts;
    for (const auto& t : tuples) {
        if (std::all_of(t.begin(), t.end(), [](int c) { return c == 0; })) {
            if (g.num_vertices() == 0) {
                FrontierPoint p;
                p.counts = t;
                p.verdict = Verdict::Feasible;
                p.family = &family;
                frontier.push_back(p);
                break;
            }
            continue;
        }
        bool dominated = false;
        for (const auto& f : frontier)
            if (leq(f.counts, t)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        bool known_infeasible = false;
        for (const auto& inf : infeasible)
            if (leq(t, inf)) {
                known_infeasible = true;
                break;
            }
        if (known_infeasible) continue;

        std::map<int, int> counts;
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i] > 0) counts[family.terms[i].first] += t[i];
        auto result = decide(g, PackingSequence(counts), per_call);
        FrontierPoint p;
        p.counts = t;
        p.verdict = result.verdict;
        p.family = &family;
        if (result.verdict == Verdict::Feasible)
            frontier.push_back(p);
        else if (result.verdict == Verdict::Infeasible)
            infeasible.push_back(t);
        else
            timeouts.push_back(p);
    }
    for (auto& p : timeouts) frontier.push_back(p);
    return frontier;
}

}  // namespace packpaint
