#pragma once

#include "vdec/coloring.hpp"
#include "vdec/graph.hpp"

#include <iosfwd>
#include <string>

namespace vdec {

// Edge-list text format: first line "p q", then q lines "u v" (0-based).
// '#' starts a comment. Throws ParseError.
SimpleGraph read_edge_list(std::istream& in);
SimpleGraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const SimpleGraph& g);
void write_edge_list_file(const std::string& path, const SimpleGraph& g);

// Coloring text format: header "palette k", then lines "u v c".
EdgeColoring read_coloring(std::istream& in);
EdgeColoring read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const EdgeColoring& c);
void write_coloring_file(const std::string& path, const EdgeColoring& c);

/// DOT export of a colored tree/graph, edge labels = colors.
void write_dot(std::ostream& out, const SimpleGraph& g, const EdgeColoring* c = nullptr);

} // namespace vdec
