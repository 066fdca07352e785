#pragma once

#include <stdexcept>
#include <string>

#include "crux/graph.hpp"

namespace crux {

// Raised on any defect in the text format; the message names the defect and
// the offending line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Text format: first line "n m", then m lines "u v" with 0 <= u < v < n.
// LF line endings. Rejected with distinct messages: malformed header,
// malformed edge line, vertex id out of range, self-loop, endpoints out of
// order (reversed), duplicate edge, and edge count mismatch.
Graph parse_graph(const std::string& text);

// Canonical form: edges sorted lexicographically, one per line, trailing LF.
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace crux
