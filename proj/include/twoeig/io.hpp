#ifndef TWOEIG_IO_HPP
#define TWOEIG_IO_HPP

#include <filesystem>
#include <string>

#include "twoeig/signed_graph.hpp"

namespace twoeig {

enum class GraphFormat { json, matrix, dot };

// {"n": .., "one_indexed": .., "edges": [[u, v, s], ..]}; edges are written
// sorted so that emit(parse(emit(g))) is byte-identical.
std::string to_json(const SignedGraph& g, bool one_indexed = false);
// n lines of n space-separated values in {-1, 0, 1}.
std::string to_matrix_text(const SignedGraph& g);
// Undirected DOT; positive edges solid blue, negative edges dashed red.
std::string to_dot(const SignedGraph& g);

std::string to_text(const SignedGraph& g, GraphFormat f, bool one_indexed = false);

SignedGraph parse_graph_json(const std::string& text);
SignedGraph parse_graph_matrix(const std::string& text);
// Sniffs JSON vs matrix from the first non-space byte.
SignedGraph parse_graph(const std::string& text);
SignedGraph read_graph_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

} // namespace twoeig

#endif
