#pragma once

// Shared fixtures and the independent brute-force pattern oracle used to
// cross-check the library's detectors. The subset oracle below re-derives
// every pattern definition directly on induced subgraphs and shares no
// search code with ttw::find_pattern.

#include <algorithm>
#include <random>
#include <vector>

#include "ttwfree/basic.hpp"
#include "ttwfree/graph.hpp"
#include "ttwfree/patterns.hpp"

namespace th {

using ttw::Graph;

inline Graph cycle(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph::from_edges(k, e);
}

inline Graph path_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(k, e);
}

inline Graph complete(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Graph::from_edges(k, e);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, e);
}

// rim 0..k-1 plus center k adjacent to the given rim positions
inline Graph wheel(int k, std::vector<int> spokes) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  for (int s : spokes) e.emplace_back(k, s);
  return Graph::from_edges(k + 1, e);
}

inline Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, 5 + i);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

// two 5-cycles sharing exactly the edge 0-1
inline Graph double_pentagon() {
  return Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                               {1, 5}, {5, 6}, {6, 7}, {7, 0}});
}

inline Graph two_c5_sharing_vertex() {
  return Graph::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                               {0, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}});
}

// full k-daisy with minimal petals x-m-y, the middle vertex on the center
inline Graph full_daisy(int k, ttw::DaisyDescriptor* desc_out = nullptr) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  ttw::DaisyDescriptor d;
  d.base_hole.resize(k);
  for (int i = 0; i < k; ++i) d.base_hole[i] = i;
  int next = k;
  for (int i = 0; i < k; ++i) {
    int x = next, m = next + 1, y = next + 2;
    next += 3;
    e.emplace_back((i + k - 1) % k, x);
    e.emplace_back(x, m);
    e.emplace_back(m, y);
    e.emplace_back(y, (i + 1) % k);
    e.emplace_back(i, m);
    d.petals.push_back({i, {x, m, y}});
  }
  if (desc_out) *desc_out = d;
  return Graph::from_edges(next, e);
}

// 6-hole with two minimal petals at centers 0 and 1
inline Graph nonfull_daisy_6_2(ttw::DaisyDescriptor* desc_out = nullptr) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 6; ++i) e.emplace_back(i, (i + 1) % 6);
  ttw::DaisyDescriptor d;
  d.base_hole = {0, 1, 2, 3, 4, 5};
  int next = 6;
  for (int ci : {0, 1}) {
    int x = next, m = next + 1, y = next + 2;
    next += 3;
    e.emplace_back((ci + 5) % 6, x);
    e.emplace_back(x, m);
    e.emplace_back(m, y);
    e.emplace_back(y, (ci + 1) % 6);
    e.emplace_back(ci, m);
    d.petals.push_back({ci, {x, m, y}});
  }
  if (desc_out) *desc_out = d;
  return Graph::from_edges(next, e);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(a.n() + u, a.n() + v);
  return Graph::from_edges(a.n() + b.n(), e);
}

inline Graph toggle_edges(const Graph& g, std::mt19937_64& rng, int count) {
  auto edges = g.edges();
  for (int t = 0; t < count; ++t) {
    int u = static_cast<int>(rng() % g.n());
    int v = static_cast<int>(rng() % g.n());
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    auto it = std::find(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it != edges.end())
      edges.erase(it);
    else
      edges.emplace_back(u, v);
  }
  return Graph::from_edges(g.n(), edges);
}

// ------------------------------------------------------------------ oracle

namespace detail {

inline std::vector<int> inside_degree(const Graph& g, const std::vector<int>& s) {
  std::vector<int> deg(s.size(), 0);
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < s.size(); ++j)
      if (i != j && g.adjacent(s[i], s[j])) ++deg[i];
  return deg;
}

inline bool set_connected(const Graph& g, const std::vector<int>& s) {
  if (s.empty()) return true;
  std::vector<char> seen(s.size(), 0);
  std::vector<size_t> stack{0};
  seen[0] = 1;
  size_t cnt = 0;
  while (!stack.empty()) {
    size_t i = stack.back();
    stack.pop_back();
    ++cnt;
    for (size_t j = 0; j < s.size(); ++j)
      if (!seen[j] && g.adjacent(s[i], s[j])) {
        seen[j] = 1;
        stack.push_back(j);
      }
  }
  return cnt == s.size();
}

inline bool is_hole_set(const Graph& g, const std::vector<int>& s) {
  if (s.size() < 4) return false;
  auto deg = inside_degree(g, s);
  for (int d : deg)
    if (d != 2) return false;
  return set_connected(g, s);
}

// recovers the cyclic order of a hole set
inline std::vector<int> cycle_order(const Graph& g, const std::vector<int>& s) {
  std::vector<int> order{s[0]};
  int prev = -1, cur = s[0];
  while (static_cast<int>(order.size()) < static_cast<int>(s.size())) {
    for (int v : s)
      if (v != prev && v != cur && g.adjacent(cur, v)) {
        order.push_back(v);
        prev = cur;
        cur = v;
        break;
      }
  }
  return order;
}

inline bool confined(const Graph& g, const std::vector<int>& order, int x, int y) {
  int k = static_cast<int>(order.size());
  std::vector<int> ypos, xpos;
  for (int i = 0; i < k; ++i) {
    if (g.adjacent(order[i], y)) ypos.push_back(i);
    if (g.adjacent(order[i], x)) xpos.push_back(i);
  }
  if (ypos.size() < 3 || xpos.empty()) return false;
  for (size_t i = 0; i < ypos.size(); ++i) {
    int a = ypos[i], b = ypos[(i + 1) % ypos.size()];
    int len = (b - a + k) % k;
    if (len == 0) len = k;
    bool all = true;
    for (int xp : xpos)
      if ((xp - a + k) % k > len) all = false;
    if (all) return true;
  }
  return false;
}

inline bool is_theta_set(const Graph& g, const std::vector<int>& s) {
  auto deg = inside_degree(g, s);
  std::vector<int> apex;
  for (size_t i = 0; i < s.size(); ++i) {
    if (deg[i] == 3)
      apex.push_back(static_cast<int>(i));
    else if (deg[i] != 2)
      return false;
  }
  if (apex.size() != 2) return false;
  int a = s[apex[0]], b = s[apex[1]];
  if (g.adjacent(a, b)) return false;
  std::vector<int> rest;
  for (int v : s)
    if (v != a && v != b) rest.push_back(v);
  // three components, each holding exactly one neighbor of a and of b
  std::vector<int> comp(rest.size(), -1);
  int comps = 0;
  for (size_t i = 0; i < rest.size(); ++i) {
    if (comp[i] >= 0) continue;
    std::vector<size_t> stack{i};
    comp[i] = comps;
    while (!stack.empty()) {
      size_t u = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < rest.size(); ++j)
        if (comp[j] < 0 && g.adjacent(rest[u], rest[j])) {
          comp[j] = comps;
          stack.push_back(j);
        }
    }
    ++comps;
  }
  if (comps != 3) return false;
  std::vector<int> na(3, 0), nb(3, 0);
  for (size_t i = 0; i < rest.size(); ++i) {
    if (g.adjacent(rest[i], a)) ++na[comp[i]];
    if (g.adjacent(rest[i], b)) ++nb[comp[i]];
  }
  for (int c = 0; c < 3; ++c)
    if (na[c] != 1 || nb[c] != 1) return false;
  return true;
}

inline bool is_wheelish_set(const Graph& g, const std::vector<int>& s, bool even) {
  for (int c : s) {
    std::vector<int> rest;
    for (int v : s)
      if (v != c) rest.push_back(v);
    if (!is_hole_set(g, rest)) continue;
    int cnt = 0;
    for (int v : rest)
      if (g.adjacent(c, v)) ++cnt;
    if (cnt >= 3 && (!even || cnt % 2 == 0)) return true;
  }
  return false;
}

enum class WacFlavor { Any, Turtle, CWac };

inline bool is_wac_set(const Graph& g, const std::vector<int>& s, WacFlavor flavor) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) {
      int c = s[i], c2 = s[j];
      if (!g.adjacent(c, c2)) continue;
      std::vector<int> rest;
      for (int v : s)
        if (v != c && v != c2) rest.push_back(v);
      if (!is_hole_set(g, rest)) continue;
      int n1 = 0, n2 = 0;
      for (int v : rest) {
        if (g.adjacent(c, v)) ++n1;
        if (g.adjacent(c2, v)) ++n2;
      }
      if (n1 < 3 || n2 < 3) continue;
      if (flavor == WacFlavor::Any) return true;
      auto order = cycle_order(g, rest);
      bool turtle = confined(g, order, c, c2) || confined(g, order, c2, c);
      if (flavor == WacFlavor::Turtle && turtle) return true;
      if (flavor == WacFlavor::CWac && !turtle) return true;
    }
  return false;
}

inline bool is_prism_set(const Graph& g, const std::vector<int>& s) {
  size_t n = s.size();
  if (n < 6) return false;
  auto deg = inside_degree(g, s);
  // pick two disjoint triangles among the degree-3 vertices
  std::vector<int> corners;
  for (size_t i = 0; i < n; ++i) {
    if (deg[i] == 3)
      corners.push_back(s[i]);
    else if (deg[i] != 2)
      return false;
  }
  if (corners.size() != 6) return false;
  auto is_tri = [&](int a, int b, int c) {
    return g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
  };
  for (int i1 = 0; i1 < 6; ++i1)
    for (int i2 = i1 + 1; i2 < 6; ++i2)
      for (int i3 = i2 + 1; i3 < 6; ++i3) {
        int a1 = corners[i1], a2 = corners[i2], a3 = corners[i3];
        std::vector<int> other;
        for (int v : corners)
          if (v != a1 && v != a2 && v != a3) other.push_back(v);
        if (!is_tri(a1, a2, a3) || !is_tri(other[0], other[1], other[2])) continue;
        // trace the three connector paths from a1, a2, a3
        std::vector<char> used(g.n(), 0);
        for (int v : corners) used[v] = 1;
        bool ok = true;
        std::vector<int> hit;
        int covered = 6;
        for (int start : {a1, a2, a3}) {
          int prev = -1, cur = start;
          for (;;) {
            int next = -1;
            for (int v : s) {
              if (v == prev || v == cur || !g.adjacent(cur, v)) continue;
              bool is_corner_mate =
                  (cur == a1 && (v == a2 || v == a3)) ||
                  (cur == a2 && (v == a1 || v == a3)) ||
                  (cur == a3 && (v == a1 || v == a2)) ||
                  (std::count(other.begin(), other.end(), cur) &&
                   std::count(other.begin(), other.end(), v));
              if (is_corner_mate) continue;
              if (next >= 0) {
                ok = false;
                break;
              }
              next = v;
            }
            if (!ok || next < 0) {
              ok = false;
              break;
            }
            if (std::count(other.begin(), other.end(), next)) {
              hit.push_back(next);
              break;
            }
            if (used[next]) {
              ok = false;
              break;
            }
            used[next] = 1;
            ++covered;
            prev = cur;
            cur = next;
          }
          if (!ok) break;
        }
        if (!ok || hit.size() != 3) continue;
        std::sort(hit.begin(), hit.end());
        if (std::adjacent_find(hit.begin(), hit.end()) != hit.end()) continue;
        if (covered != static_cast<int>(n)) continue;
        // edge budget: 6 triangle edges plus one per path step
        int inside = 0;
        for (size_t x = 0; x < n; ++x)
          for (size_t y = x + 1; y < n; ++y)
            if (g.adjacent(s[x], s[y])) ++inside;
        if (inside == 6 + static_cast<int>(n - 6) + 3) return true;
      }
  return false;
}

inline bool is_cube_set(const Graph& g, const std::vector<int>& s) {
  if (s.size() != 8) return false;
  auto sub = ttw::induced_subgraph(g, s);
  return ttw::isomorphic(sub.graph, ttw::reference_cube());
}

}  // namespace detail

// Exhaustive subset search, the ground truth for n <= ~16.
inline bool subset_oracle_has(const Graph& g, ttw::PatternKind kind) {
  int n = g.n();
  std::vector<int> s;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    s.clear();
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(v);
    bool hit = false;
    switch (kind) {
      case ttw::PatternKind::Triangle:
        hit = s.size() == 3 && g.adjacent(s[0], s[1]) && g.adjacent(s[0], s[2]) &&
              g.adjacent(s[1], s[2]);
        break;
      case ttw::PatternKind::Hole:
        hit = detail::is_hole_set(g, s);
        break;
      case ttw::PatternKind::EvenHole:
        hit = s.size() % 2 == 0 && detail::is_hole_set(g, s);
        break;
      case ttw::PatternKind::OddHole:
        hit = s.size() % 2 == 1 && detail::is_hole_set(g, s);
        break;
      case ttw::PatternKind::Theta:
        hit = detail::is_theta_set(g, s);
        break;
      case ttw::PatternKind::Wheel:
        hit = detail::is_wheelish_set(g, s, false);
        break;
      case ttw::PatternKind::EvenWheel:
        hit = detail::is_wheelish_set(g, s, true);
        break;
      case ttw::PatternKind::Wac:
        hit = detail::is_wac_set(g, s, detail::WacFlavor::Any);
        break;
      case ttw::PatternKind::Turtle:
        hit = detail::is_wac_set(g, s, detail::WacFlavor::Turtle);
        break;
      case ttw::PatternKind::CWac:
        hit = detail::is_wac_set(g, s, detail::WacFlavor::CWac);
        break;
      case ttw::PatternKind::Prism:
        hit = detail::is_prism_set(g, s);
        break;
      case ttw::PatternKind::Cube:
        hit = detail::is_cube_set(g, s);
        break;
    }
    if (hit) return true;
  }
  return false;
}

}  // namespace th
