#pragma once

#include <stdexcept>
#include <string>

#include "ttwfree/decompose.hpp"
#include "ttwfree/graph.hpp"
#include "ttwfree/treewidth.hpp"

namespace ttw {

enum class InputFormat { EdgeList, Dimacs, Graph6 };

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Edge list: one "u v" pair per line, 0-based ids, '#' comments.
// DIMACS: "p edge n m" header and 1-based "e u v" lines.
// graph6: standard ASCII encoding, one graph per line.
Graph parse_graph(const std::string& text, InputFormat format);

std::string write_edge_list(const Graph& g);
std::string write_dimacs(const Graph& g);
std::string write_graph6(const Graph& g);

std::optional<InputFormat> format_from_name(const std::string& name);

// PACE-style tree decomposition: "s td <bags> <max-bag-size> <n>" header,
// "b <id> <v...>" bag lines and "<i> <j>" tree edges, all 1-based.
std::string write_pace(const TreeRepresentation& rep, int n);

struct PaceDecomposition {
  TreeRepresentation rep;
  int n = 0;
};

PaceDecomposition parse_pace(const std::string& text);

std::string decomposition_dot(const DecompositionTree& t);

}  // namespace ttw
