#ifndef POWERGRAPH_IO_HPP
#define POWERGRAPH_IO_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "powergraph/graph.hpp"
#include "powergraph/power.hpp"

namespace powergraph {

/// Canonical serialization: one line of space-separated labels.
inline std::string write_labels(const PowerGraph& g) {
    std::string out;
    for (label_t v : g.labels()) out += (out.empty() ? "" : " ") + std::to_string(v);
    out += '\n';
    return out;
}

inline PowerGraph parse_labels(const std::string& text, label_t label_cap = kDefaultLabelCap) {
    std::istringstream in(text);
    std::vector<label_t> labels;
    std::string token;
    while (in >> token) {
        try {
            std::size_t pos = 0;
            unsigned long long v = std::stoull(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
            labels.push_back(static_cast<label_t>(v));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad label '" + token + "'");
        }
    }
    return PowerGraph::from_labels(std::move(labels), label_cap);
}

/// Edge-list export: "order size" header, then one "a b" line per edge with
/// a < b. Endpoints are labels, not ranks, so isolated vertices are only
/// recoverable from the labels serialization.
inline std::string write_edge_list(const PowerGraph& g) {
    const auto edges = g.edges();
    std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (const auto& [a, b] : edges) out += std::to_string(a) + " " + std::to_string(b) + "\n";
    return out;
}

struct EdgeListData {
    std::uint64_t order = 0;
    std::vector<std::pair<label_t, label_t>> edges;
};

inline EdgeListData parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    EdgeListData data;
    std::uint64_t m = 0;
    if (!(in >> data.order >> m)) throw std::invalid_argument("missing edge-list header");
    for (std::uint64_t k = 0; k < m; ++k) {
        label_t a = 0, b = 0;
        if (!(in >> a >> b)) throw std::invalid_argument("edge list truncated");
        if (a == 0 || a >= b) throw std::invalid_argument("edges must satisfy 0 < a < b");
        data.edges.emplace_back(a, b);
    }
    std::string rest;
    if (in >> rest) throw std::invalid_argument("trailing data after the edge list");
    return data;
}

/// DOT export. Vertices of the same power clique share a fill color,
/// mirroring the boxed cliques of the usual picture of D_n; path edges are
/// drawn bold, clique edges dashed.
inline std::string write_dot(const PowerGraph& g, const std::string& name = "power_graph") {
    static const char* kPalette[] = {"lightgoldenrod", "lightblue",  "palegreen",
                                     "lightsalmon",    "plum",       "khaki",
                                     "lightpink",      "lightcyan",  "wheat",
                                     "thistle",        "honeydew",   "mistyrose"};
    constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

    std::string out = "graph " + name + " {\n  node [style=filled];\n";
    for (const auto& [exp, members] : g.power_classes()) {
        const bool is_clique = members.size() >= 2;
        const std::string color = is_clique ? kPalette[exp % kPaletteSize] : "white";
        for (label_t v : members) {
            out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v) +
                   "\", fillcolor=\"" + color + "\"";
            if (is_clique) out += ", group=\"q" + std::to_string(exp) + "\"";
            out += "];\n";
        }
    }
    for (const auto& [a, b] : g.edges()) {
        out += "  v" + std::to_string(a) + " -- v" + std::to_string(b);
        out += (b - a == 1) ? " [penwidth=2]" : " [style=dashed]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

} // namespace powergraph

#endif
