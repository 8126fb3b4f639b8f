#include "ttwfree/treewidth.hpp"

#include <algorithm>
#include <stdexcept>

#include "ttwfree/patterns.hpp"

namespace ttw {

int TreeRepresentation::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

TreeRepValidation validate_treerep(const Graph& g, const TreeRepresentation& rep) {
  TreeRepValidation out;
  int t = static_cast<int>(rep.bags.size());
  if (t == 0) {
    out.reason = "no bags";
    return out;
  }
  for (const auto& bag : rep.bags)
    for (int v : bag)
      if (v < 0 || v >= g.n()) {
        out.reason = "bag vertex out of range";
        return out;
      }
  if (static_cast<int>(rep.edges.size()) != t - 1) {
    out.reason = "bag graph is not a tree (edge count)";
    return out;
  }
  std::vector<std::vector<int>> tree_adj(t);
  for (auto [i, j] : rep.edges) {
    if (i < 0 || i >= t || j < 0 || j >= t || i == j) {
      out.reason = "tree edge out of range";
      return out;
    }
    tree_adj[i].push_back(j);
    tree_adj[j].push_back(i);
  }
  {
    std::vector<char> seen(t, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++cnt;
      for (int v : tree_adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    if (cnt != t) {
      out.reason = "bag graph is not connected";
      return out;
    }
  }

  std::vector<std::vector<int>> holding(g.n());
  for (int i = 0; i < t; ++i)
    for (int v : rep.bags[i]) holding[v].push_back(i);
  for (int v = 0; v < g.n(); ++v) {
    if (holding[v].empty()) {
      out.reason = "vertex missing from every bag";
      return out;
    }
    // bags holding v must induce a subtree
    std::vector<char> in(t, 0), seen(t, 0);
    for (int i : holding[v]) in[i] = 1;
    std::vector<int> stack{holding[v][0]};
    seen[holding[v][0]] = 1;
    size_t cnt = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++cnt;
      for (int w : tree_adj[u])
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (cnt != holding[v].size()) {
      out.reason = "vertex bag set not connected";
      return out;
    }
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i : holding[u]) {
      for (int w : rep.bags[i])
        if (w == v) covered = true;
      if (covered) break;
    }
    if (!covered) {
      out.reason = "edge not inside any bag";
      return out;
    }
  }
  out.valid = true;
  out.width = rep.width();
  return out;
}

namespace {

void add_bag(TreeRepresentation& rep, std::vector<int> bag) {
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  rep.bags.push_back(std::move(bag));
}

TreeRepresentation hole_rep(const Hole& h) {
  TreeRepresentation rep;
  int k = static_cast<int>(h.size());
  for (int i = 1; i + 1 < k; ++i) {
    add_bag(rep, {h[0], h[i], h[i + 1]});
    if (i > 1) rep.edges.emplace_back(i - 2, i - 1);
  }
  return rep;
}

TreeRepresentation cube_rep(const Graph& g) {
  auto bip = is_bipartite(g);
  std::vector<int> a, b;
  for (int v = 0; v < g.n(); ++v)
    (bip.coloring[v] == bip.coloring[0] ? a : b).push_back(v);
  TreeRepresentation rep;
  add_bag(rep, a);
  for (int i = 0; i < 4; ++i) {
    int mate = -1;
    for (int v : b)
      if (!g.adjacent(a[i], v)) mate = v;
    std::vector<int> bag{mate};
    for (int j = 0; j < 4; ++j)
      if (j != i) bag.push_back(a[j]);
    add_bag(rep, bag);
    rep.edges.emplace_back(0, i + 1);
  }
  return rep;
}

TreeRepresentation daisy_rep(const Graph& g, const DaisyDescriptor& d) {
  const Hole& h = d.base_hole;
  int k = static_cast<int>(h.size());
  bool full = static_cast<int>(d.petals.size()) == k;

  // rotation offset: for non-full daisies the construction needs the first
  // position to be petal-free
  int r = 0;
  if (!full) {
    std::vector<char> has_petal(k, 0);
    for (const auto& p : d.petals) has_petal[p.center_index] = 1;
    for (int i = 0; i < k; ++i)
      if (!has_petal[i]) {
        r = i;
        break;
      }
  }
  auto C = [&](int j) { return h[(r + j - 1) % k]; };  // 1-based around the hole

  TreeRepresentation rep;
  int cores = full ? k : k - 1;
  for (int i = 1; i <= cores; ++i) {
    std::vector<int> bag{C(i), C(i + 1), C(i + 2)};
    bag.push_back(C(1));
    if (full) bag.push_back(C(2));
    add_bag(rep, bag);
    if (i > 1) rep.edges.emplace_back(i - 2, i - 1);
  }
  for (const auto& petal : d.petals) {
    int i = (petal.center_index - r + k) % k;  // petal centered at C(i+1)
    if (i == 0) i = k;  // full daisies wrap: the C(1) petal pends at the last core
    const auto& p = petal.path;
    int t_i = i - 1;  // bag index of core node i
    int prev = static_cast<int>(rep.bags.size());
    add_bag(rep, {C(i), C(i + 1), C(i + 2), p.front()});
    rep.edges.emplace_back(t_i, prev);
    for (size_t j = 0; j + 1 < p.size(); ++j) {
      int cur = static_cast<int>(rep.bags.size());
      add_bag(rep, {p[j], p[j + 1], C(i + 1), C(i + 2)});
      rep.edges.emplace_back(prev, cur);
      prev = cur;
    }
  }
  return rep;
}

}  // namespace

TreeRepresentation treerep_basic(const Graph& g, const BasicKind& kind) {
  switch (kind.type) {
    case BasicType::K1: {
      TreeRepresentation rep;
      add_bag(rep, {0});
      return rep;
    }
    case BasicType::K2: {
      TreeRepresentation rep;
      add_bag(rep, {0, 1});
      return rep;
    }
    case BasicType::Cube:
      return cube_rep(g);
    case BasicType::Daisy: {
      const auto& d = *kind.daisy;
      if (d.petals.empty()) return hole_rep(d.base_hole);
      return daisy_rep(g, d);
    }
  }
  throw std::logic_error("treerep_basic: unknown kind");
}

namespace {

TreeRepresentation rewrite_marker(const TreeRepresentation& rep,
                                  const InducedPath& marker, int a) {
  // replace every appearance of marker-minus-its-last-vertex by {a}
  std::vector<int> remove(marker.begin(), marker.end() - 1);
  std::sort(remove.begin(), remove.end());
  TreeRepresentation out;
  out.edges = rep.edges;
  for (const auto& bag : rep.bags) {
    bool touched = false;
    std::vector<int> nb;
    for (int v : bag) {
      if (std::binary_search(remove.begin(), remove.end(), v))
        touched = true;
      else
        nb.push_back(v);
    }
    if (touched) nb.push_back(a);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    out.bags.push_back(std::move(nb));
  }
  return out;
}

int find_bag_containing(const TreeRepresentation& rep, const std::vector<int>& need) {
  for (size_t i = 0; i < rep.bags.size(); ++i) {
    bool all = true;
    for (int v : need) {
      if (!std::binary_search(rep.bags[i].begin(), rep.bags[i].end(), v)) {
        all = false;
        break;
      }
    }
    if (all) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

TreeRepresentation glue_treereps(const TreeRepresentation& rep_x,
                                 const TreeRepresentation& rep_y,
                                 const SeparatorSplit& s) {
  TreeRepresentation rx = rep_x, ry = rep_y;
  std::vector<int> seam;
  switch (s.kind) {
    case SeparatorKind::Clique:
      seam = s.clique;
      break;
    case SeparatorKind::Two:
      rx = rewrite_marker(rep_x, s.witness_y, s.a);
      ry = rewrite_marker(rep_y, s.witness_x, s.a);
      seam = {s.a, s.b};
      break;
    case SeparatorKind::P3:
      rx = rewrite_marker(rep_x, s.witness_y, s.a);
      ry = rewrite_marker(rep_y, s.witness_x, s.a);
      seam = {s.a, s.b, s.c};
      break;
  }
  std::sort(seam.begin(), seam.end());
  int ix = find_bag_containing(rx, seam);
  int iy = find_bag_containing(ry, seam);
  if (ix < 0 || iy < 0)
    throw std::runtime_error("glue_treereps: no bag supports the separator");

  TreeRepresentation out = rx;
  int off = static_cast<int>(rx.bags.size());
  for (const auto& bag : ry.bags) out.bags.push_back(bag);
  for (auto [i, j] : ry.edges) out.edges.emplace_back(i + off, j + off);
  out.edges.emplace_back(ix, iy + off);
  return out;
}

namespace {

SeparatorSplit remap_split(const SeparatorSplit& s, const std::vector<int>& ids) {
  SeparatorSplit out = s;
  auto m = [&](int v) { return ids[v]; };
  for (auto& v : out.clique) v = m(v);
  if (out.a >= 0) out.a = m(out.a);
  if (out.b >= 0) out.b = m(out.b);
  if (out.c >= 0) out.c = m(out.c);
  for (auto& v : out.side_x) v = m(v);
  for (auto& v : out.side_y) v = m(v);
  for (auto& v : out.witness_x) v = m(v);
  for (auto& v : out.witness_y) v = m(v);
  return out;
}

}  // namespace

ExactWidth exact_width(const Graph& g, const DecompositionTree& tree) {
  int nn = static_cast<int>(tree.nodes.size());
  std::vector<TreeRepresentation> reps(nn);
  bool any_big_daisy = false, any_wheelish = false, any_hole = false, any_k2 = false;

  for (int id = nn - 1; id >= 0; --id) {
    const auto& node = tree.nodes[id];
    if (node.children.empty()) {
      auto kind = recognize_basic(node.graph);
      if (!kind) throw std::runtime_error("exact_width: non-basic leaf");
      auto rep = treerep_basic(node.graph, *kind);
      for (auto& bag : rep.bags)
        for (auto& v : bag) v = node.orig_ids[v];
      for (auto& bag : rep.bags) std::sort(bag.begin(), bag.end());
      reps[id] = std::move(rep);
      switch (kind->type) {
        case BasicType::K1:
          break;
        case BasicType::K2:
          any_k2 = true;
          break;
        case BasicType::Cube:
          any_wheelish = true;
          break;
        case BasicType::Daisy: {
          const auto& d = *kind->daisy;
          if (d.petals.empty()) {
            any_hole = true;
          } else {
            any_wheelish = true;
            if (static_cast<int>(d.petals.size()) ==
                    static_cast<int>(d.base_hole.size()) &&
                d.base_hole.size() >= 5)
              any_big_daisy = true;
          }
          break;
        }
      }
      continue;
    }
    auto sep = remap_split(*node.separator, node.orig_ids);
    TreeRepresentation acc = reps[node.children[0]];
    for (size_t ci = 1; ci < node.children.size(); ++ci)
      acc = glue_treereps(acc, reps[node.children[ci]], sep);
    reps[id] = std::move(acc);
  }

  ExactWidth out;
  out.rep = std::move(reps[0]);
  if (any_big_daisy) {
    out.cls = {4, WidthReason::FullBigDaisy};
  } else if (any_wheelish) {
    out.cls = {3, WidthReason::HasWheelNoBigDaisy};
  } else if (any_hole) {
    out.cls = {2, WidthReason::WheelFree};
  } else {
    out.cls = {any_k2 || g.edge_count() > 0 ? 1 : 0, WidthReason::Tiny};
  }
  return out;
}

Graph k5_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) e.emplace_back(i, j);
  return Graph::from_edges(5, e);
}

Graph octahedron_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (!(j == i + 3)) e.emplace_back(i, j);
  return Graph::from_edges(6, e);
}

Graph k4_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) e.emplace_back(i, j);
  return Graph::from_edges(4, e);
}

bool verify_minor_model(const Graph& g, const std::vector<std::vector<int>>& sets,
                        const Graph& pattern) {
  if (static_cast<int>(sets.size()) != pattern.n()) return false;
  std::vector<char> used(g.n(), 0);
  for (const auto& s : sets) {
    if (s.empty()) return false;
    for (int v : s) {
      if (v < 0 || v >= g.n() || used[v]) return false;
      used[v] = 1;
    }
    if (!connected_within(g, s)) return false;
  }
  for (auto [i, j] : pattern.edges()) {
    bool hit = false;
    for (int u : sets[i]) {
      for (int v : sets[j])
        if (g.adjacent(u, v)) hit = true;
      if (hit) break;
    }
    if (!hit) return false;
  }
  return true;
}

MinorModel minor_witness_k5_or_octahedron(const Graph& g, const DaisyDescriptor& d) {
  int k = static_cast<int>(d.base_hole.size());
  if (static_cast<int>(d.petals.size()) != k || k < 5)
    throw std::invalid_argument("minor witness requires a full k-daisy, k >= 5");

  // petal starting at hole position j (0-based): centered at position j+1
  std::vector<const InducedPath*> petal_from(k, nullptr);
  for (const auto& p : d.petals)
    petal_from[(p.center_index + k - 1) % k] = &p.path;

  auto unit = [&](int j) {  // 1-based hole position -> {c_j} + petal P_j
    std::vector<int> s{d.base_hole[(j - 1) % k]};
    const auto* p = petal_from[(j - 1) % k];
    s.insert(s.end(), p->begin(), p->end());
    return s;
  };
  auto merge = [](std::vector<std::vector<int>> parts) {
    std::vector<int> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  };

  MinorModel model;
  if (k % 2 == 1) {
    int l = (k - 1) / 2;
    model.target = MinorTarget::K5;
    model.branch_sets = {unit(1), unit(2), unit(3)};
    std::vector<std::vector<int>> dset, eset;
    for (int i = 2; i <= l; ++i) {
      dset.push_back(unit(2 * i));
      eset.push_back(unit(2 * i + 1));
    }
    model.branch_sets.push_back(merge(dset));
    model.branch_sets.push_back(merge(eset));
    if (!verify_minor_model(g, model.branch_sets, k5_graph()))
      throw std::logic_error("minor model failed verification");
  } else {
    int l = k / 2;
    model.target = MinorTarget::Octahedron;
    std::vector<std::vector<int>> b2, c2;
    for (int i = 2; i <= l - 1; ++i) b2.push_back(unit(2 * i + 1));
    for (int i = 3; i <= l; ++i) c2.push_back(unit(2 * i));
    model.branch_sets = {unit(1), unit(2), unit(3),
                         unit(4), merge(b2), merge(c2)};
    if (!verify_minor_model(g, model.branch_sets, octahedron_graph()))
      throw std::logic_error("minor model failed verification");
  }
  return model;
}

}  // namespace ttw
