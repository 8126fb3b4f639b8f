#pragma once

#include <optional>
#include <vector>

#include "ttwfree/graph.hpp"
#include "ttwfree/separators.hpp"

namespace ttw {

struct TreeNode {
  Graph graph;
  std::vector<int> orig_ids;                 // node-local id -> root id
  std::optional<SeparatorSplit> separator;   // node-local ids; absent on leaves
  std::vector<int> children;
  int parent = -1;
};

struct DecompositionTree {
  std::vector<TreeNode> nodes;  // index 0 is the root
  std::vector<int> leaf_ids() const;
};

enum class DecomposeStatus { Ok, BudgetExceeded };

struct DecomposeResult {
  DecomposeStatus status;
  std::optional<DecompositionTree> tree;  // present iff status == Ok
  int nodes_constructed = 0;
};

// Builds the decomposition tree: clique separators of minimum size first,
// then proper 2-separators on atomic nodes, then proper P3-separators on
// superatomic nodes. Construction aborts with BudgetExceeded as soon as the
// node count would pass the cap (default 2n-1), which certifies rejection.
DecomposeResult decompose(const Graph& g, std::optional<int> budget = std::nullopt);

// Five-way node type, evaluated in order:
//   1 disconnected or single vertex; 2 cutvertex or K2; 3 clique separator,
//   hole or cube; 4 proper 2-separator or wheel; 5 anything else.
int node_type(const Graph& g);

// An ear, or a vertex of degree >= 3 lying in no ear.
std::vector<std::vector<int>> chunks(const Graph& g);

// Budget bookkeeping value f(g) = f_t(g). See chunks() for the t=5 count.
long potential(const Graph& g);

bool is_hole_graph(const Graph& g);
bool is_wheel_graph(const Graph& g);
bool is_cube_graph(const Graph& g);

}  // namespace ttw
