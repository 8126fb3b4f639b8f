#include "ttwfree/analyze.hpp"

#include <stdexcept>

namespace ttw {

Analysis analyze_full(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("analyze: empty graph");
  Analysis out;
  auto dec = decompose(g);
  out.report.nodes_constructed = dec.nodes_constructed;
  if (dec.status == DecomposeStatus::BudgetExceeded) {
    out.report.rejection = Rejection::BudgetExceeded;
    return out;
  }
  out.tree = std::move(dec.tree);
  const auto& tree = *out.tree;

  bool ewf = true, ehf = true, bip = true, planar = true;
  for (int leaf : tree.leaf_ids()) {
    auto kind = recognize_basic(tree.nodes[leaf].graph);
    if (!kind) {
      out.report.rejection = Rejection::NonBasicLeaf;
      out.report.rejected_leaf = leaf;
      out.report.leaves.clear();
      return out;
    }
    LeafReport lr;
    lr.node_id = leaf;
    lr.type = kind->type;
    switch (kind->type) {
      case BasicType::K1:
      case BasicType::K2:
        break;
      case BasicType::Cube:
        ehf = false;  // the cube carries a 6-hole
        break;
      case BasicType::Daisy: {
        auto cls = classify_daisy(tree.nodes[leaf].graph, *kind->daisy);
        if (!cls.even_wheel_free) ewf = false;
        if (!cls.even_hole_free) ehf = false;
        if (!cls.bipartite) bip = false;
        if (cls.full && cls.hole_odd) planar = false;
        lr.daisy_class = cls;
        break;
      }
    }
    out.report.leaves.push_back(std::move(lr));
  }

  out.report.ttw_free = true;
  out.report.even_wheel_free = ewf;
  out.report.even_hole_free = ehf;
  out.report.bipartite_theta_wac_free = bip;
  out.report.planar = planar;
  out.width = exact_width(g, tree);
  out.report.treewidth = out.width->rep.width();
  return out;
}

ClassReport analyze(const Graph& g) { return analyze_full(g).report; }

bool planarity_verdict(const DecompositionTree& t) {
  for (int leaf : t.leaf_ids()) {
    auto kind = recognize_basic(t.nodes[leaf].graph);
    if (!kind) throw std::runtime_error("planarity_verdict: non-basic leaf");
    if (kind->type == BasicType::Daisy) {
      const auto& d = *kind->daisy;
      bool full = d.petals.size() == d.base_hole.size();
      if (full && d.base_hole.size() % 2 == 1) return false;
    }
  }
  return true;
}

}  // namespace ttw
