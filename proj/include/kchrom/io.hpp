#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kchrom/graph.hpp"

namespace kchrom {

// graph6, the de-facto interchange format: a size header followed by the
// upper triangle of the adjacency matrix in column-major order, packed into
// 6-bit groups biased by 63. No trailing newline in the returned string.
std::string graph6_encode(const Graph& g);

// Accepts one graph6 line (without the newline). Throws std::invalid_argument
// on bad length, characters outside [63,126], or nonzero padding bits.
Graph graph6_decode(std::string_view line);

// Newline-delimited graph6. Blank lines are skipped; an optional ">>graph6<<"
// prefix on the first line is tolerated.
std::vector<Graph> read_graph6_stream(std::istream& in);
void write_graph6_stream(std::ostream& out, const std::vector<Graph>& gs);

std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& gs);

// Adjacency-list fixture format: one line per vertex, "v: u1 u2 ... uk",
// 0-indexed. The symmetric closure is applied; ids out of range, self-loops
// and malformed lines throw std::invalid_argument.
Graph parse_adjacency_list(std::istream& in);
Graph read_adjacency_list_file(const std::string& path);

} // namespace kchrom
