#include "twoeig/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace twoeig {

std::string to_json(const SignedGraph& g, bool one_indexed) {
    nlohmann::ordered_json j;
    j["n"] = g.order();
    j["one_indexed"] = one_indexed;
    auto edges = nlohmann::ordered_json::array();
    const int off = one_indexed ? 1 : 0;
    for (const auto& e : g.edges()) edges.push_back({e.u + off, e.v + off, e.sign});
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

std::string to_matrix_text(const SignedGraph& g) {
    std::string out;
    for (int i = 0; i < g.order(); ++i) {
        for (int j = 0; j < g.order(); ++j) {
            if (j) out += ' ';
            out += std::to_string(g.sign(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string to_dot(const SignedGraph& g) {
    std::string out = "graph signed {\n";
    for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (const auto& e : g.edges()) {
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
        out += e.sign > 0 ? " [color=blue];\n" : " [color=red, style=dashed];\n";
    }
    out += "}\n";
    return out;
}

std::string to_text(const SignedGraph& g, GraphFormat f, bool one_indexed) {
    switch (f) {
        case GraphFormat::json: return to_json(g, one_indexed);
        case GraphFormat::matrix: return to_matrix_text(g);
        case GraphFormat::dot: return to_dot(g);
    }
    throw std::invalid_argument("unknown graph format");
}

SignedGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON must carry \"n\" and \"edges\"");
    const int n = j.at("n").get<int>();
    const bool one_indexed = j.value("one_indexed", false);
    const int off = one_indexed ? 1 : 0;
    std::vector<EdgeSpec> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("each edge must be a [u, v, sign] triple");
        edges.push_back({e[0].get<int>() - off, e[1].get<int>() - off, e[2].get<int>()});
    }
    return SignedGraph::from_edge_list(n, edges);
}

SignedGraph parse_graph_matrix(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<std::int64_t>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::int64_t> row;
        std::int64_t v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) {
            std::string tok;
            ls.clear();
            ls >> tok;
            throw std::invalid_argument("matrix line " + std::to_string(lineno) +
                                        ": unexpected token '" + tok + "'");
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    const int n = static_cast<int>(rows.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("matrix line " + std::to_string(i + 1) + ": expected " +
                                        std::to_string(n) + " values, got " +
                                        std::to_string(rows[i].size()));
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return SignedGraph::from_adjacency(m);
}

SignedGraph parse_graph(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{' ? parse_graph_json(text) : parse_graph_matrix(text);
    }
    throw std::invalid_argument("empty graph input");
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SignedGraph read_graph_file(const std::filesystem::path& path) {
    return parse_graph(read_text_file(path));
}

} // namespace twoeig
