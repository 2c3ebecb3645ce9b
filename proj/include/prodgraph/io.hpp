#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "prodgraph/graph.hpp"

namespace prodgraph {

/// Input error carrying the 1-based line where parsing failed.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// Edge-list text format: first line "n m", then m lines "u v" (0-based).
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

/// graph6: printable-ASCII encoding of an undirected graph. The reader
/// accepts an optional ">>graph6<<" header. Supports orders up to 258047.
Graph decode_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

/// Reads either format; a leading line of digits means edge-list, anything
/// else is treated as graph6 (graph6 bytes never include digits or spaces).
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

}  // namespace prodgraph
