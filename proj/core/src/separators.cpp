#include "ttwfree/separators.hpp"

#include <algorithm>
#include <stdexcept>

namespace ttw {

namespace {

std::vector<std::vector<int>> components_without(const Graph& g,
                                                 std::span<const int> removed) {
  std::vector<char> gone(g.n(), 0);
  for (int v : removed) gone[v] = 1;
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (gone[s] || seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : g.neighbors(u))
        if (!gone[v] && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

bool attached(const Graph& g, int v, std::span<const int> comp) {
  for (int u : comp)
    if (g.adjacent(v, u)) return true;
  return false;
}

// G[side + {a, b}] equal to a single a..b path?
bool side_is_bare_path(const Graph& g, std::span<const int> side, int a, int b) {
  std::vector<char> in(g.n(), 0);
  for (int v : side) in[v] = 1;
  in[a] = in[b] = 1;
  auto deg_in = [&](int v) {
    int d = 0;
    for (int u : g.neighbors(v))
      if (in[u]) ++d;
    return d;
  };
  if (deg_in(a) != 1 || deg_in(b) != 1) return false;
  for (int v : side)
    if (deg_in(v) != 2) return false;
  std::vector<int> all(side.begin(), side.end());
  all.push_back(a);
  all.push_back(b);
  return connected_within(g, all);
}

}  // namespace

std::optional<SeparatorSplit> find_clique_separator(const Graph& g) {
  if (g.n() == 0) return std::nullopt;
  auto separates = [&](std::span<const int> k) {
    return components_without(g, k).size() >= 2;
  };
  if (separates(std::vector<int>{})) {
    SeparatorSplit s;
    s.kind = SeparatorKind::Clique;
    return s;
  }
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> k{v};
    if (separates(k)) {
      SeparatorSplit s;
      s.kind = SeparatorKind::Clique;
      s.clique = k;
      return s;
    }
  }
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      std::vector<int> k{u, v};
      if (separates(k)) {
        SeparatorSplit s;
        s.kind = SeparatorKind::Clique;
        s.clique = k;
        return s;
      }
    }
  // triangles, in case a host ever carries them
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      for (int w : g.neighbors(v)) {
        if (w <= v || !g.adjacent(u, w)) continue;
        std::vector<int> k{u, v, w};
        if (separates(k)) {
          SeparatorSplit s;
          s.kind = SeparatorKind::Clique;
          s.clique = k;
          return s;
        }
      }
    }
  return std::nullopt;
}

std::optional<SeparatorSplit> find_proper_2_separator(const Graph& g) {
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b) {
      if (g.adjacent(a, b)) continue;
      std::vector<int> sep{a, b};
      auto comps = components_without(g, sep);
      if (comps.size() != 2) continue;
      const auto &x = comps[0], &y = comps[1];
      if (!attached(g, a, x) || !attached(g, b, x)) continue;
      if (!attached(g, a, y) || !attached(g, b, y)) continue;
      if (side_is_bare_path(g, x, a, b) || side_is_bare_path(g, y, a, b)) continue;
      SeparatorSplit s;
      s.kind = SeparatorKind::Two;
      s.a = a;
      s.b = b;
      s.side_x = x;
      s.side_y = y;
      s.witness_x = *shortest_path_within(g, a, b, x);
      s.witness_y = *shortest_path_within(g, a, b, y);
      return s;
    }
  return std::nullopt;
}

Looseness looseness(const Graph& g, int a, int c, int b,
                    std::span<const int> comp) {
  if (!shortest_path_within(g, a, b, comp))
    throw std::invalid_argument("looseness: component carries no a..b path");
  return shortest_path_within(g, a, b, comp, c) ? Looseness::Loose
                                                : Looseness::Tight;
}

std::optional<SeparatorSplit> find_proper_p3_separator(const Graph& g) {
  for (int c = 0; c < g.n(); ++c) {
    const auto& nb = g.neighbors(c);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        int a = nb[i], b = nb[j];
        if (g.adjacent(a, b)) continue;
        std::vector<int> sep{a, c, b};
        auto comps = components_without(g, sep);
        if (comps.size() != 2) continue;
        const auto &c0 = comps[0], &c1 = comps[1];
        if (!attached(g, a, c0) || !attached(g, b, c0)) continue;
        if (!attached(g, a, c1) || !attached(g, b, c1)) continue;
        if (!attached(g, c, c0) || !attached(g, c, c1)) continue;
        bool l0 = shortest_path_within(g, a, b, c0, c).has_value();
        bool l1 = shortest_path_within(g, a, b, c1, c).has_value();
        if (l0 == l1) continue;  // need one loose and one tight side
        const auto& x = l0 ? c0 : c1;
        const auto& y = l0 ? c1 : c0;
        if (side_is_bare_path(g, x, a, b) || side_is_bare_path(g, y, a, b)) continue;
        SeparatorSplit s;
        s.kind = SeparatorKind::P3;
        s.a = a;
        s.c = c;
        s.b = b;
        s.side_x = x;
        s.side_y = y;
        s.witness_x = *shortest_path_within(g, a, b, x, c);
        s.witness_y = *shortest_path_within(g, a, b, y);
        return s;
      }
  }
  return std::nullopt;
}

namespace {

void validate_split(const Graph& g, const SeparatorSplit& s) {
  auto fail = [](const char* msg) { throw std::invalid_argument(msg); };
  if (s.kind == SeparatorKind::Clique) {
    for (size_t i = 0; i < s.clique.size(); ++i)
      for (size_t j = i + 1; j < s.clique.size(); ++j)
        if (!g.adjacent(s.clique[i], s.clique[j])) fail("clique separator not a clique");
    if (components_without(g, s.clique).size() < 2)
      fail("clique separator does not separate");
    return;
  }
  std::vector<int> sep = s.kind == SeparatorKind::Two ? std::vector<int>{s.a, s.b}
                                                      : std::vector<int>{s.a, s.c, s.b};
  if (s.kind == SeparatorKind::P3) {
    if (!g.adjacent(s.a, s.c) || !g.adjacent(s.c, s.b) || g.adjacent(s.a, s.b))
      fail("separator vertices do not induce a length-2 path");
  } else if (g.adjacent(s.a, s.b)) {
    fail("2-separator endpoints adjacent");
  }
  auto comps = components_without(g, sep);
  if (comps.size() != 2) fail("split does not have exactly two components");
  std::vector<int> sx = s.side_x, sy = s.side_y;
  std::sort(sx.begin(), sx.end());
  std::sort(sy.begin(), sy.end());
  if (!((comps[0] == sx && comps[1] == sy) || (comps[0] == sy && comps[1] == sx)))
    fail("split sides do not match the components");
  auto check_witness = [&](const InducedPath& w, const std::vector<int>& side,
                           bool avoid_c) {
    if (w.size() < 2 || w.front() != s.a || w.back() != s.b)
      fail("witness path endpoints wrong");
    if (!is_induced_path(g, w)) fail("witness path not induced");
    for (size_t i = 1; i + 1 < w.size(); ++i) {
      if (!std::binary_search(side.begin(), side.end(), w[i]))
        fail("witness path leaves its side");
      if (avoid_c && g.adjacent(w[i], s.c)) fail("loose witness touches N(c)");
    }
  };
  check_witness(s.witness_x, sx, s.kind == SeparatorKind::P3);
  check_witness(s.witness_y, sy, false);
}

}  // namespace

std::vector<Block> make_blocks(const Graph& g, const SeparatorSplit& s) {
  validate_split(g, s);
  std::vector<Block> blocks;
  auto push_block = [&](std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto sub = induced_subgraph(g, verts);
    blocks.push_back({std::move(sub.graph), std::move(sub.orig_ids)});
  };

  if (s.kind == SeparatorKind::Clique) {
    for (const auto& comp : components_without(g, s.clique)) {
      std::vector<int> verts = s.clique;
      verts.insert(verts.end(), comp.begin(), comp.end());
      push_block(std::move(verts));
    }
    return blocks;
  }

  std::vector<int> sep = s.kind == SeparatorKind::Two ? std::vector<int>{s.a, s.b}
                                                      : std::vector<int>{s.a, s.c, s.b};
  std::vector<int> bx = s.side_x;
  bx.insert(bx.end(), sep.begin(), sep.end());
  for (size_t i = 1; i + 1 < s.witness_y.size(); ++i) bx.push_back(s.witness_y[i]);
  push_block(std::move(bx));

  std::vector<int> by = s.side_y;
  by.insert(by.end(), sep.begin(), sep.end());
  for (size_t i = 1; i + 1 < s.witness_x.size(); ++i) by.push_back(s.witness_x[i]);
  push_block(std::move(by));
  return blocks;
}

}  // namespace ttw
