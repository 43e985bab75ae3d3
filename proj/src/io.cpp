#include "packpaint/io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace packpaint {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::runtime_error parse_error(int line, const std::string& what) {
    return std::runtime_error("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    constexpr long long kMaxVertices = 50000;  // bitset mirror is n^2 bits
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) {
                std::string probe;
                std::istringstream again(line);
                if (!(again >> probe)) continue;  // blank or comment before header
                throw parse_error(lineno, "malformed header, expected 'n m'");
            }
            std::string extra;
            if (ls >> extra) throw parse_error(lineno, "trailing tokens after header");
            if (n < 0 || m < 0) throw parse_error(lineno, "negative counts in header");
            if (n > kMaxVertices)
                throw parse_error(lineno, "vertex count " + std::to_string(n) +
                                              " exceeds the supported maximum " +
                                              std::to_string(kMaxVertices));
            continue;
        }
        long long u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) throw parse_error(lineno, "expected 'u v'");
        std::string extra;
        if (ls >> extra) throw parse_error(lineno, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(lineno, "vertex out of range 0.." + std::to_string(n - 1));
        if (u == v) throw parse_error(lineno, "self-loop");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw parse_error(lineno, "duplicate edge");
        edges.emplace_back(int(u), int(v));
    }
    if (n < 0) throw std::runtime_error("empty edge-list input, expected 'n m' header");
    if (static_cast<long long>(edges.size()) != m)
        throw std::runtime_error("header promises " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
    return Graph::from_edge_list(int(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.num_vertices() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << u << " " << v << "\n";
    return out.str();
}

std::string edge_list_digest(const Graph& g) {
    std::string text = write_edge_list(g);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

ColoringReport ColoringReport::build(const Graph& g, const std::string& pipeline,
                                     std::uint64_t seed, const PipelineResult& result) {
    ColoringReport r;
    r.vertices = g.num_vertices();
    r.edges = g.num_edges();
    r.digest = edge_list_digest(g);
    r.pipeline = pipeline;
    r.seed = seed;
    r.seq = result.seq;
    r.coloring = result.coloring;
    for (const auto& layer : result.trace.layers.layers) r.layer_sizes.push_back(int(layer.size()));
    r.e_size = int(result.trace.E.size());
    r.e_prime_size = int(result.trace.E_prime.size());
    r.c_size = int(result.trace.C.size());
    r.recolor_steps = int(result.trace.recolor_log.size());
    r.escalation = to_string(result.trace.escalation);
    r.verification = "ok";
    return r;
}

std::string report_to_json(const ColoringReport& report) {
    OrderedJson j;
    j["input"] = {{"vertices", report.vertices},
                  {"edges", report.edges},
                  {"digest", report.digest}};
    j["pipeline"] = report.pipeline;
    j["seed"] = report.seed;
    j["sequence"] = report.seq.to_string();
    OrderedJson classes = OrderedJson::array();
    for (const auto& cls : report.coloring.classes) {
        OrderedJson c;
        c["s"] = cls.s;
        c["vertices"] = cls.vertices;
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    j["uncolored"] = report.coloring.uncolored;
    j["trace"] = {{"layer_sizes", report.layer_sizes}, {"E", report.e_size},
                  {"E_prime", report.e_prime_size},   {"C", report.c_size},
                  {"recolor_steps", report.recolor_steps}, {"escalation", report.escalation}};
    j["verification"] = report.verification;
    if (report.color_ms >= 0)
        j["timings"] = {{"color_ms", report.color_ms}, {"verify_ms", report.verify_ms}};
    return j.dump(2) + "\n";
}

ColoringReport report_from_json(const std::string& text) {
    auto j = OrderedJson::parse(text);
    ColoringReport r;
    r.vertices = j.at("input").at("vertices").get<int>();
    r.edges = j.at("input").at("edges").get<int>();
    r.digest = j.at("input").at("digest").get<std::string>();
    r.pipeline = j.at("pipeline").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.seq = PackingSequence::parse(j.at("sequence").get<std::string>());
    for (const auto& c : j.at("classes")) {
        ColorClass cls;
        cls.s = c.at("s").get<int>();
        cls.vertices = c.at("vertices").get<std::vector<int>>();
        r.coloring.classes.push_back(std::move(cls));
    }
    r.coloring.uncolored = j.at("uncolored").get<std::vector<int>>();
    const auto& t = j.at("trace");
    r.layer_sizes = t.at("layer_sizes").get<std::vector<int>>();
    r.e_size = t.at("E").get<int>();
    r.e_prime_size = t.at("E_prime").get<int>();
    r.c_size = t.at("C").get<int>();
    r.recolor_steps = t.at("recolor_steps").get<int>();
    r.escalation = t.at("escalation").get<std::string>();
    r.verification = j.at("verification").get<std::string>();
    if (j.contains("timings")) {
        r.color_ms = j["timings"].value("color_ms", -1.0);
        r.verify_ms = j["timings"].value("verify_ms", -1.0);
    }
    return r;
}

std::string to_dot(const Graph& g, const PackingColoring& coloring) {
    static const char* kPalette[] = {"lightblue",  "lightpink",  "palegreen", "khaki",
                                     "plum",       "lightsalmon", "paleturquoise", "wheat",
                                     "lightgray",  "thistle",    "peachpuff", "honeydew"};
    std::vector<std::string> label(g.num_vertices(), "?");
    std::vector<int> class_of(g.num_vertices(), -1);
    std::map<int, int> same_s_counter;
    for (std::size_t ci = 0; ci < coloring.classes.size(); ++ci) {
        const auto& cls = coloring.classes[ci];
        int index_within = ++same_s_counter[cls.s];
        for (int v : cls.vertices) {
            label[v] = std::to_string(cls.s) + "_" + std::to_string(index_within);
            class_of[v] = int(ci);
        }
    }
    std::ostringstream out;
    out << "graph packing {\n  node [style=filled];\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        const char* color =
            class_of[v] >= 0 ? kPalette[class_of[v] % (sizeof kPalette / sizeof *kPalette)]
                             : "white";
        out << "  " << v << " [label=\"" << v << ":" << label[v] << "\", fillcolor=" << color
            << "];\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace packpaint
