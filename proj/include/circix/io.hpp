#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "circix/code.hpp"
#include "circix/gf.hpp"
#include "circix/graph.hpp"
#include "circix/params.hpp"
#include "circix/rational.hpp"

namespace circix {

using nlohmann::json;

// Graph JSON: {"n": int, "side_info": [[int]]}
inline json to_json(const SideInfoGraph& g) {
    json side = json::array();
    for (int i = 0; i < g.n(); ++i) side.push_back(g.side_info(i));
    return json{{"n", g.n()}, {"side_info", side}};
}

inline SideInfoGraph graph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("side_info"))
        throw std::invalid_argument("graph JSON: need fields n, side_info");
    return {j.at("n").get<int>(), j.at("side_info").get<std::vector<std::vector<int>>>()};
}

// Matrix JSON: {"q": int, "rows": int, "cols": int, "entries": [row-major ints]}
inline json to_json(const GFMatrix& m) {
    return json{{"q", m.field().q()}, {"rows", m.rows()}, {"cols", m.cols()},
                {"entries", m.entries()}};
}

inline GFMatrix matrix_from_json(const json& j) {
    if (!j.contains("q") || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON: need fields q, rows, cols, entries");
    return {PrimeField(j.at("q").get<int>()), j.at("rows").get<int>(), j.at("cols").get<int>(),
            j.at("entries").get<std::vector<int>>()};
}

// Code JSON: {"q": int, "n": int, "t": int, "l": int, "B": matrix JSON}
inline json to_json(const LinearIndexCode& code) {
    return json{{"q", code.field.q()}, {"n", code.n}, {"t", code.t}, {"l", code.l},
                {"B", to_json(code.B)}};
}

inline LinearIndexCode code_from_json(const json& j) {
    if (!j.contains("q") || !j.contains("n") || !j.contains("t") || !j.contains("l") ||
        !j.contains("B"))
        throw std::invalid_argument("code JSON: need fields q, n, t, l, B");
    return {PrimeField(j.at("q").get<int>()), j.at("n").get<int>(), j.at("t").get<int>(),
            j.at("l").get<int>(), matrix_from_json(j.at("B"))};
}

// Coloring JSON: {"k": int, "d": int, "assignment": [int]}
inline json to_json(const CircularColoring& col) {
    return json{{"k", col.k}, {"d", col.d}, {"assignment", col.assignment}};
}

inline CircularColoring coloring_from_json(const json& j) {
    if (!j.contains("k") || !j.contains("d") || !j.contains("assignment"))
        throw std::invalid_argument("coloring JSON: need fields k, d, assignment");
    return {j.at("k").get<int>(), j.at("d").get<int>(), j.at("assignment").get<std::vector<int>>()};
}

/// DOT export for undirected graphs; each edge written once, lexicographic.
inline std::string to_dot(const SideInfoGraph& g) {
    if (!g.is_undirected()) throw std::invalid_argument("to_dot: undirected graphs only");
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("parse error in " + path + ": " + e.what());
    }
    return j;
}

inline void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

}  // namespace circix
