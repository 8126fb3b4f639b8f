#include "ttwfree/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "ttwfree/basic.hpp"
#include "ttwfree/ears.hpp"

namespace ttw {

std::vector<int> DecompositionTree::leaf_ids() const {
  std::vector<int> out;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].children.empty()) out.push_back(static_cast<int>(i));
  return out;
}

bool is_hole_graph(const Graph& g) {
  if (g.n() < 4) return false;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return false;
  return connected_components(g).size() == 1;
}

bool is_wheel_graph(const Graph& g) {
  for (int c = 0; c < g.n(); ++c) {
    if (g.degree(c) < 3) continue;
    std::vector<int> rest;
    for (int v = 0; v < g.n(); ++v)
      if (v != c) rest.push_back(v);
    if (is_hole_graph(induced_subgraph(g, rest).graph)) return true;
  }
  return false;
}

bool is_cube_graph(const Graph& g) {
  return g.n() == 8 && g.edge_count() == 12 && isomorphic(g, reference_cube());
}

namespace {

bool has_cutvertex(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> rest;
    for (int u = 0; u < g.n(); ++u)
      if (u != v) rest.push_back(u);
    if (rest.empty()) continue;
    auto sub = induced_subgraph(g, rest);
    if (connected_components(sub.graph).size() >= 2) return true;
  }
  return false;
}

}  // namespace

int node_type(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("node_type: empty graph");
  if (g.n() == 1 || connected_components(g).size() >= 2) return 1;
  if ((g.n() == 2 && g.adjacent(0, 1)) || has_cutvertex(g)) return 2;
  if (find_clique_separator(g) || is_hole_graph(g) || is_cube_graph(g)) return 3;
  if (find_proper_2_separator(g) || is_wheel_graph(g)) return 4;
  return 5;
}

std::vector<std::vector<int>> chunks(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> in_ear(g.n(), 0);
  for (const auto& e : find_ears(g)) {
    for (int v : e.path) in_ear[v] = 1;
    out.push_back(e.path);
  }
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) >= 3 && !in_ear[v]) out.push_back({v});
  return out;
}

long potential(const Graph& g) {
  switch (node_type(g)) {
    case 1:
      return g.n();
    case 2:
      return g.n() - 1;
    case 3:
      return g.n() - 2;
    case 4: {
      long d3 = 0;
      for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= 3) ++d3;
      return d3 - 3;
    }
    default:
      return static_cast<long>(chunks(g).size()) - 5;
  }
}

namespace {

std::optional<SeparatorSplit> pick_separator(const Graph& g) {
  if (auto s = find_clique_separator(g)) return s;
  if (auto s = find_proper_2_separator(g)) return s;
  if (auto s = find_proper_p3_separator(g)) return s;
  return std::nullopt;
}

}  // namespace

DecomposeResult decompose(const Graph& g, std::optional<int> budget_opt) {
  int budget = budget_opt.value_or(2 * g.n() - 1);
  DecompositionTree tree;
  DecomposeResult res;

  TreeNode root;
  root.graph = g;
  root.orig_ids.resize(g.n());
  for (int v = 0; v < g.n(); ++v) root.orig_ids[v] = v;
  if (budget < 1) {
    res.status = DecomposeStatus::BudgetExceeded;
    res.nodes_constructed = 0;
    return res;
  }
  tree.nodes.push_back(std::move(root));

  // depth-first, children expanded in block order
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    auto sep = pick_separator(tree.nodes[id].graph);
    if (!sep) continue;
    auto blocks = make_blocks(tree.nodes[id].graph, *sep);
    if (static_cast<int>(tree.nodes.size() + blocks.size()) > budget) {
      res.status = DecomposeStatus::BudgetExceeded;
      res.nodes_constructed = static_cast<int>(tree.nodes.size() + blocks.size());
      return res;
    }
    tree.nodes[id].separator = std::move(sep);
    std::vector<int> child_ids;
    for (auto& blk : blocks) {
      TreeNode child;
      child.graph = std::move(blk.graph);
      child.parent = id;
      child.orig_ids.reserve(blk.parent_ids.size());
      for (int pid : blk.parent_ids)
        child.orig_ids.push_back(tree.nodes[id].orig_ids[pid]);
      child_ids.push_back(static_cast<int>(tree.nodes.size()));
      tree.nodes[id].children.push_back(child_ids.back());
      tree.nodes.push_back(std::move(child));
    }
    // push in reverse so the first block is expanded first
    for (auto it = child_ids.rbegin(); it != child_ids.rend(); ++it)
      stack.push_back(*it);
  }

  res.status = DecomposeStatus::Ok;
  res.nodes_constructed = static_cast<int>(tree.nodes.size());
  res.tree = std::move(tree);
  return res;
}

}  // namespace ttw
