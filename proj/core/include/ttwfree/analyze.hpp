#pragma once

#include <optional>
#include <vector>

#include "ttwfree/basic.hpp"
#include "ttwfree/decompose.hpp"
#include "ttwfree/graph.hpp"
#include "ttwfree/treewidth.hpp"

namespace ttw {

struct LeafReport {
  int node_id;
  BasicType type;
  std::optional<DaisyClass> daisy_class;  // present for daisy leaves
};

enum class Rejection { None, BudgetExceeded, NonBasicLeaf };

struct ClassReport {
  bool ttw_free = false;
  bool even_wheel_free = false;
  bool even_hole_free = false;
  bool bipartite_theta_wac_free = false;
  bool planar = false;
  std::optional<int> treewidth;  // present iff ttw_free
  std::vector<LeafReport> leaves;
  Rejection rejection = Rejection::None;
  int rejected_leaf = -1;   // NonBasicLeaf only
  int nodes_constructed = 0;
};

struct Analysis {
  ClassReport report;
  std::optional<DecompositionTree> tree;  // present unless budget exceeded
  std::optional<ExactWidth> width;        // present iff accepted
};

// Full verdict pipeline: decompose, certify leaves, derive subclass flags,
// planarity and exact width. Throws std::invalid_argument on the empty graph.
Analysis analyze_full(const Graph& g);

ClassReport analyze(const Graph& g);

// False iff some leaf is a full odd daisy. Throws on a non-basic leaf.
bool planarity_verdict(const DecompositionTree& t);

}  // namespace ttw
