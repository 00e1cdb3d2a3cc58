#pragma once

#include <iosfwd>
#include <string>

#include "subt/graph.hpp"
#include "subt/vertex_set.hpp"

namespace subt {

/// Parsed instance file: graph plus declared terminal set.
struct TextInstance {
    Graph graph;
    VertexSet terminals;
};

/// Reads the text format:
///   c <comment>          anywhere
///   p <n> <m>            first non-comment line
///   e <u> <v>            m lines, 1-indexed endpoints
///   t <v>                zero or more terminal declarations
/// Throws ParseError naming the offending line.
TextInstance read_instance(std::istream& in);
TextInstance read_instance_file(const std::string& path);

/// Writes the same format; edges sorted by (u,v), terminals ascending.
void write_instance(std::ostream& out, const Graph& g, const VertexSet& terminals);

/// Solution file: one 1-indexed vertex per line, 'c' comments ignored.
VertexSet read_solution(std::istream& in, int n);
void write_solution(std::ostream& out, const VertexSet& s);

}  // namespace subt
