#pragma once

#include <string>
#include <vector>

#include "ttwfree/basic.hpp"
#include "ttwfree/decompose.hpp"
#include "ttwfree/graph.hpp"
#include "ttwfree/separators.hpp"

namespace ttw {

struct TreeRepresentation {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> edges;  // tree edges between bag indices
  int width() const;
};

struct TreeRepValidation {
  bool valid = false;
  int width = -1;
  std::string reason;
};

// Checks the three conditions (vertex coverage, edge coverage, connected
// bag sets) plus that the bag graph is a tree.
TreeRepValidation validate_treerep(const Graph& g, const TreeRepresentation& rep);

// Width-optimal representation of a basic leaf, in the leaf's own ids.
TreeRepresentation treerep_basic(const Graph& g, const BasicKind& kind);

// Joins two block representations across a split. Bags must already use the
// parent's vertex ids; marker-path interiors are rewritten away and the seam
// edge joins bags containing {a,b}, {a,c,b} or the clique.
TreeRepresentation glue_treereps(const TreeRepresentation& rep_x,
                                 const TreeRepresentation& rep_y,
                                 const SeparatorSplit& s);

enum class WidthReason { Tiny, WheelFree, HasWheelNoBigDaisy, FullBigDaisy };

struct WidthClass {
  int predicted = -1;
  WidthReason reason = WidthReason::Tiny;
};

struct ExactWidth {
  WidthClass cls;
  TreeRepresentation rep;  // root ids, width exactly tw(g)
};

// Bottom-up construction over an accepted decomposition tree. Throws
// std::runtime_error when some leaf is not basic.
ExactWidth exact_width(const Graph& g, const DecompositionTree& tree);

enum class MinorTarget { K5, Octahedron };

struct MinorModel {
  MinorTarget target;
  std::vector<std::vector<int>> branch_sets;
};

// The explicit lower-bound model for a full k-daisy, k >= 5: five branch
// sets forming K5 when k is odd, six forming the octahedron when k is even.
MinorModel minor_witness_k5_or_octahedron(const Graph& g, const DaisyDescriptor& d);

// Branch sets disjoint, nonempty, connected, with every pattern edge realized.
bool verify_minor_model(const Graph& g, const std::vector<std::vector<int>>& sets,
                        const Graph& pattern);

Graph k5_graph();
Graph octahedron_graph();
Graph k4_graph();

}  // namespace ttw
