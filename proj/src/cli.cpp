#include "packpaint/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "packpaint/exact.hpp"
#include "packpaint/gen.hpp"
#include "packpaint/io.hpp"
#include "packpaint/pipelines.hpp"
#include "packpaint/verify.hpp"

namespace packpaint {

namespace {

using OrderedJson = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PACKPAINT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::runtime_error("PACKPAINT_SEED is not a number");
        }
    }
    return 0;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Feasible: return "feasible";
        case Verdict::Infeasible: return "infeasible";
        case Verdict::Timeout: return "timeout";
    }
    return "?";
}

OrderedJson classes_json(const PackingColoring& col) {
    OrderedJson out = OrderedJson::array();
    for (const auto& cls : col.classes) {
        OrderedJson c;
        c["s"] = cls.s;
        c["vertices"] = cls.vertices;
        out.push_back(std::move(c));
    }
    return out;
}

FamilyTemplate parse_family(const std::string& text, int max_a, int max_b) {
    FamilyTemplate fam;
    std::stringstream ss(text);
    std::string term;
    std::vector<char> vars;
    while (std::getline(ss, term, ',')) {
        auto caret = term.find('^');
        if (caret == std::string::npos || caret + 1 >= term.size())
            throw std::runtime_error("family term '" + term + "' must look like 2^b");
        int s = std::stoi(term.substr(0, caret));
        char var = term[caret + 1];
        if (var != 'a' && var != 'b')
            throw std::runtime_error("family exponent must be the variable a or b");
        vars.push_back(var);
        fam.terms.emplace_back(s, var == 'a' ? max_a : max_b);
    }
    if (fam.terms.empty() || fam.terms.size() > 2)
        throw std::runtime_error("family must have one or two terms");
    if (fam.terms.size() == 2 && vars[0] == vars[1])
        throw std::runtime_error("family terms must use distinct variables");
    return fam;
}

int cmd_bench(const std::string& suite, std::ostream& out, std::ostream& err) {
    if (suite == "pipelines") {
        for (int k = 3; k <= 6; ++k) {
            std::vector<int> ts{0, 1, k};
            for (int t : ts) {
                for (std::uint64_t seed = 0; seed < 3; ++seed) {
                    Graph g = gen_random_saturated(40, k, t, seed);
                    auto t0 = Clock::now();
                    auto res = color_auto(g, seed);
                    double ms = ms_since(t0);
                    OrderedJson line;
                    line["suite"] = "pipelines";
                    line["k"] = k;
                    line["t"] = t;
                    line["seed"] = seed;
                    line["ms"] = ms;
                    line["sequence"] = res.seq.to_string();
                    line["escalation"] = to_string(res.trace.escalation);
                    out << line.dump() << "\n";
                }
            }
        }
        return 0;
    }
    if (suite == "exact") {
        for (int k = 3; k <= 4; ++k) {
            for (int t = 1; t <= k; ++t) {
                Graph g = gen_gkt(k, t);
                auto seq = PackingSequence::ones_twos_threes(k - 1, 0, t);
                auto t0 = Clock::now();
                auto dec = decide(g, seq);
                OrderedJson line;
                line["suite"] = "exact";
                line["graph"] = "gkt(" + std::to_string(k) + "," + std::to_string(t) + ")";
                line["sequence"] = seq.to_string();
                line["verdict"] = verdict_name(dec.verdict);
                line["nodes"] = dec.nodes_explored;
                line["ms"] = ms_since(t0);
                out << line.dump() << "\n";
            }
        }
        return 0;
    }
    if (suite == "mwis") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Graph g = gen_random_saturated(16, 4, 2, seed);
            auto w = weights_53(4);
            auto t0 = Clock::now();
            auto [exact_set, exact_phi] = exact_mwis(g, w);
            double exact_ms = ms_since(t0);
            t0 = Clock::now();
            ExchangePolicy pol;
            pol.tiebreak_seed = seed;
            auto local = exchange_optimize(g, w, pol);
            double local_ms = ms_since(t0);
            OrderedJson line;
            line["suite"] = "mwis";
            line["seed"] = seed;
            line["exact_phi"] = exact_phi;
            line["local_phi"] = phi(g, local, w);
            line["exact_ms"] = exact_ms;
            line["local_ms"] = local_ms;
            out << line.dump() << "\n";
        }
        return 0;
    }
    err << "unknown bench suite '" << suite << "' (pipelines, exact, mwis)\n";
    return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"S-packing colorings of bounded-degree graphs"};
    app.name("packpaint");
    app.require_subcommand(1);

    // color
    auto* color_cmd = app.add_subcommand("color", "color a graph, print a report");
    std::string color_pipeline = "auto";
    std::uint64_t seed_opt = 0;
    bool seed_given = false;
    bool want_timings = false, want_dot = false;
    std::string color_file;
    color_cmd->add_option("--pipeline", color_pipeline, "auto|zero|mid|high|general|deg2")
        ->check(CLI::IsMember({"auto", "zero", "mid", "high", "general", "deg2"}));
    color_cmd->add_option("--seed", seed_opt)->each([&](const std::string&) { seed_given = true; });
    color_cmd->add_flag("--timings", want_timings, "include wall-clock timings in the report");
    color_cmd->add_flag("--dot", want_dot, "emit DOT instead of the JSON report");
    color_cmd->add_option("file", color_file, "edge list file or -")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a coloring report against a graph");
    std::string verify_seq, verify_report, verify_file;
    verify_cmd->add_option("--seq", verify_seq, "packing sequence, e.g. (1^2,2)")->required();
    verify_cmd->add_option("--coloring", verify_report, "coloring report JSON file")->required();
    verify_cmd->add_option("file", verify_file, "edge list file or -")->required();

    // decide
    auto* decide_cmd = app.add_subcommand("decide", "exact S-packing colorability");
    std::string decide_seq, decide_file;
    long long node_budget = SearchBudget{}.max_nodes;
    double time_budget = SearchBudget{}.max_seconds;
    decide_cmd->add_option("--seq", decide_seq)->required();
    decide_cmd->add_option("--node-budget", node_budget);
    decide_cmd->add_option("--time-budget", time_budget, "seconds");
    decide_cmd->add_option("file", decide_file, "edge list file or -")->required();

    // frontier
    auto* frontier_cmd = app.add_subcommand("frontier", "minimal feasible sequences of a family");
    std::string frontier_family, frontier_file;
    int max_a = 4, max_b = 4;
    frontier_cmd->add_option("--family", frontier_family, "e.g. 1^a,2^b")->required();
    frontier_cmd->add_option("--max-a", max_a);
    frontier_cmd->add_option("--max-b", max_b);
    frontier_cmd->add_option("file", frontier_file, "edge list file or -")->required();

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "write a generated graph as an edge list");
    std::string gen_kind;
    int gen_k = 3, gen_t = 1, gen_n = 10;
    std::uint64_t gen_seed = 0;
    bool gen_seed_given = false;
    gen_cmd->add_option("--kind", gen_kind, "gkt|bridge|petersen|path|cycle|complete|random-sat")
        ->required()
        ->check(CLI::IsMember({"gkt", "bridge", "petersen", "path", "cycle", "complete",
                               "random-sat"}));
    gen_cmd->add_option("--k", gen_k);
    gen_cmd->add_option("--t", gen_t);
    gen_cmd->add_option("--n", gen_n);
    gen_cmd->add_option("--seed", gen_seed)->each([&](const std::string&) {
        gen_seed_given = true;
    });

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "timed instance batches");
    std::string bench_suite;
    bench_cmd->add_option("--suite", bench_suite)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "packpaint: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*color_cmd) {
            std::uint64_t seed = seed_given ? seed_opt : default_seed();
            Graph g = parse_edge_list(slurp(color_file, in));
            PipelineResult result;
            auto t0 = Clock::now();
            try {
                if (color_pipeline == "auto")
                    result = color_auto(g, seed);
                else if (color_pipeline == "zero")
                    result = color_zero_saturated(g, seed);
                else if (color_pipeline == "mid")
                    result = color_mid_saturated(g, seed);
                else if (color_pipeline == "high")
                    result = color_high_saturated(g, seed);
                else if (color_pipeline == "general")
                    result = color_general(g, seed);
                else
                    result = color_deg2(g);
            } catch (const PipelineFailure& e) {
                err << "packpaint: pipeline failure: " << e.what() << "\n";
                return 3;
            }
            double color_ms = ms_since(t0);
            if (want_dot) {
                out << to_dot(g, result.coloring);
                return 0;
            }
            auto report = ColoringReport::build(g, color_pipeline, seed, result);
            if (want_timings) {
                t0 = Clock::now();
                auto check = verify(g, result.seq, result.coloring);
                report.verify_ms = ms_since(t0);
                report.color_ms = color_ms;
                report.verification = check.ok() ? "ok" : "violations";
            }
            out << report_to_json(report);
            return 0;
        }

        if (*verify_cmd) {
            Graph g = parse_edge_list(slurp(verify_file, in));
            auto seq = PackingSequence::parse(verify_seq);
            auto report = report_from_json(slurp(verify_report, in));
            if (report.digest != edge_list_digest(g))
                err << "packpaint: report digest " << report.digest
                    << " does not match the input graph (" << edge_list_digest(g) << ")\n";
            auto check = verify(g, seq, report.coloring);
            std::string recomputed = check.ok() ? "ok" : "violations";
            if (!report.verification.empty() && report.verification != recomputed)
                err << "packpaint: stored verdict '" << report.verification
                    << "' disagrees with recomputed '" << recomputed << "'\n";
            OrderedJson j;
            j["verdict"] = recomputed;
            if (!check.ok()) {
                OrderedJson viols = OrderedJson::array();
                for (const auto& v : check.violations) {
                    OrderedJson item;
                    if (v.kind == Violation::Kind::UncoloredVertex) {
                        item["kind"] = "uncolored";
                        item["vertex"] = v.u;
                    } else {
                        item["kind"] = "pair-too-close";
                        item["class"] = v.class_index;
                        item["s"] = v.distance_parameter;
                        item["pair"] = {v.u, v.v};
                        item["distance"] = v.measured_distance;
                    }
                    viols.push_back(std::move(item));
                }
                j["violations"] = std::move(viols);
            }
            out << j.dump(2) << "\n";
            return check.ok() ? 0 : 1;
        }

        if (*decide_cmd) {
            Graph g = parse_edge_list(slurp(decide_file, in));
            auto seq = PackingSequence::parse(decide_seq);
            SearchBudget budget{node_budget, time_budget};
            auto dec = decide(g, seq, budget);
            OrderedJson j;
            j["verdict"] = verdict_name(dec.verdict);
            j["sequence"] = seq.to_string();
            j["nodes"] = dec.nodes_explored;
            if (dec.verdict == Verdict::Feasible) j["classes"] = classes_json(dec.coloring);
            out << j.dump(2) << "\n";
            if (dec.verdict == Verdict::Feasible) return 0;
            return dec.verdict == Verdict::Infeasible ? 1 : 3;
        }

        if (*frontier_cmd) {
            Graph g = parse_edge_list(slurp(frontier_file, in));
            auto fam = parse_family(frontier_family, max_a, max_b);
            auto points = min_sequence_search(g, fam);
            OrderedJson j;
            j["family"] = frontier_family;
            OrderedJson arr = OrderedJson::array();
            bool timed_out = false;
            for (const auto& p : points) {
                OrderedJson item;
                item["counts"] = p.counts;
                item["sequence"] = p.sequence().to_string();
                item["verdict"] = verdict_name(p.verdict);
                timed_out |= (p.verdict == Verdict::Timeout);
                arr.push_back(std::move(item));
            }
            j["points"] = std::move(arr);
            out << j.dump(2) << "\n";
            return timed_out ? 3 : 0;
        }

        if (*gen_cmd) {
            std::uint64_t seed = gen_seed_given ? gen_seed : default_seed();
            Graph g;
            if (gen_kind == "gkt")
                g = gen_gkt(gen_k, gen_t);
            else if (gen_kind == "bridge")
                g = gen_clique_bridge(gen_k);
            else if (gen_kind == "petersen")
                g = gen_petersen();
            else if (gen_kind == "path")
                g = gen_path(gen_n);
            else if (gen_kind == "cycle")
                g = gen_cycle(gen_n);
            else if (gen_kind == "complete")
                g = gen_complete(gen_n);
            else
                g = gen_random_saturated(gen_n, gen_k, gen_t, seed);
            out << write_edge_list(g);
            return 0;
        }

        if (*bench_cmd) return cmd_bench(bench_suite, out, err);
    } catch (const PipelineFailure& e) {
        err << "packpaint: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "packpaint: " << e.what() << "\n";
        return 2;
    }
    err << "packpaint: no command\n";
    return 2;
}

}  // namespace packpaint
