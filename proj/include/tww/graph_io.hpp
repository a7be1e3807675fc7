#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tww/graph.hpp"

namespace tww {

/// DIMACS edge format: `c` comments, one `p edge <n> <m>` header, `e <u> <v>` lines with 1-based ids.
/// Duplicate `e` lines collapse. Errors throw ParseError naming the line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Several graphs in one stream, each starting at its own `p edge` header.
/// Comment lines directly before a header are returned with that graph.
struct AnnotatedGraph {
  Graph graph;
  std::vector<std::string> comments;
};
std::vector<AnnotatedGraph> parse_edge_lists(std::istream& in);

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});

/// One graph6 record (no trailing newline required; a `>>graph6<<` header is accepted).
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// Reads a graph6 stream line by line. Blank lines are skipped. Parse errors are
/// passed to `on_error` (line number, message) and do not stop the stream.
void read_graph6_stream(std::istream& in, const std::function<void(Graph, std::string_view)>& on_graph,
                        const std::function<void(std::size_t, const std::string&)>& on_error);

/// Loads a graph file; `.g6`/`.graph6` files are graph6 (first record), anything else DIMACS edge.
Graph read_graph_file(const std::string& path);

}  // namespace tww
