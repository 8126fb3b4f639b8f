#include "ttwfree/basic.hpp"

#include <algorithm>
#include <set>

#include "ttwfree/ears.hpp"

namespace ttw {

namespace {

// Connected 2-regular graphs on >= 4 vertices are exactly the holes.
std::optional<Hole> as_cycle(const Graph& g) {
  if (g.n() < 4) return std::nullopt;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return std::nullopt;
  Hole h{0};
  int prev = -1, cur = 0;
  while (true) {
    int next = -1;
    for (int w : g.neighbors(cur))
      if (w != prev) next = w;
    if (next == 0) break;
    h.push_back(next);
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(h.size()) != g.n()) return std::nullopt;  // disconnected
  return canonical_cycle(h);
}

std::optional<Hole> induced_cycle_on(const Graph& g, const std::vector<int>& verts) {
  auto sub = induced_subgraph(g, verts);
  auto cyc = as_cycle(sub.graph);
  if (!cyc) return std::nullopt;
  Hole h;
  for (int v : *cyc) h.push_back(sub.orig_ids[v]);
  return canonical_cycle(h);
}

DaisyDescriptor normalize(DaisyDescriptor d) {
  std::sort(d.petals.begin(), d.petals.end(),
            [](const Petal& a, const Petal& b) { return a.center_index < b.center_index; });
  return d;
}

std::optional<BasicKind> recognize_wheel(const Graph& g) {
  int n = g.n();
  std::optional<DaisyDescriptor> best;
  for (int c = 0; c < n; ++c) {
    if (g.degree(c) < 3) continue;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (v != c) rest.push_back(v);
    auto rim = induced_cycle_on(g, rest);
    if (!rim) continue;
    int k = static_cast<int>(rim->size());
    // one candidate daisy per sector of (rim, c)
    auto pos = std::vector<int>{};
    for (int i = 0; i < k; ++i)
      if (g.adjacent((*rim)[i], c)) pos.push_back(i);
    if (static_cast<int>(pos.size()) < 3) continue;
    for (size_t si = 0; si < pos.size(); ++si) {
      int s = pos[si], e = pos[(si + 1) % pos.size()];
      // sector runs forward from s to e; the petal is the complementary arc
      Hole hole{c};
      for (int i = s; ; i = (i + 1) % k) {
        hole.push_back((*rim)[i]);
        if (i == e) break;
      }
      if (hole.size() < 4) continue;
      InducedPath petal;
      for (int i = (e + 1) % k; i != s; i = (i + 1) % k) petal.push_back((*rim)[i]);
      if (petal.empty()) continue;
      // re-anchor hole and petal onto the canonical cycle order
      Hole canon = canonical_cycle(hole);
      int ci = -1;
      for (int i = 0; i < static_cast<int>(canon.size()); ++i)
        if (canon[i] == c) ci = i;
      int kk = static_cast<int>(canon.size());
      int pred = canon[(ci + kk - 1) % kk];
      InducedPath p = petal;
      if (!g.adjacent(p.front(), pred)) std::reverse(p.begin(), p.end());
      DaisyDescriptor cd;
      cd.base_hole = canon;
      cd.petals.push_back({ci, p});
      if (!verify_daisy(g, cd)) continue;
      if (!best || std::tie(cd.base_hole, cd.petals[0].path) <
                       std::tie(best->base_hole, best->petals[0].path))
        best = cd;
    }
  }
  if (!best) return std::nullopt;
  return BasicKind{BasicType::Daisy, best};
}

std::optional<BasicKind> recognize_multi_petal(const Graph& g) {
  auto ears = find_ears(g);
  if (ears.size() < 2) return std::nullopt;
  std::vector<char> in_ear(g.n(), 0);
  for (const auto& e : ears)
    for (int v : e.path) {
      if (in_ear[v]) return std::nullopt;  // overlapping ears: not a daisy
      in_ear[v] = 1;
    }
  std::vector<int> rest;
  for (int v = 0; v < g.n(); ++v)
    if (!in_ear[v]) rest.push_back(v);
  auto hole = induced_cycle_on(g, rest);
  if (!hole) return std::nullopt;
  int k = static_cast<int>(hole->size());
  DaisyDescriptor d;
  d.base_hole = *hole;
  for (const auto& e : ears) {
    int ci = -1;
    for (int i = 0; i < k; ++i)
      if ((*hole)[i] == e.c) ci = i;
    if (ci < 0) return std::nullopt;
    int pred = (*hole)[(ci + k - 1) % k], succ = (*hole)[(ci + 1) % k];
    if (!((e.a == pred && e.b == succ) || (e.a == succ && e.b == pred)))
      return std::nullopt;
    InducedPath p = e.path;
    if (e.a == succ) std::reverse(p.begin(), p.end());
    d.petals.push_back({ci, p});
  }
  d = normalize(d);
  if (!verify_daisy(g, d)) return std::nullopt;
  return BasicKind{BasicType::Daisy, d};
}

}  // namespace

Graph reference_cube() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) edges.emplace_back(i, 4 + j);
  return Graph::from_edges(8, edges);
}

bool verify_daisy(const Graph& g, const DaisyDescriptor& d) {
  const Hole& hole = d.base_hole;
  int k = static_cast<int>(hole.size());
  if (!is_hole(g, hole)) return false;

  // coverage and disjointness
  std::vector<int> owner(g.n(), -1);  // -2 hole, petal index otherwise
  for (int v : hole) {
    if (v < 0 || v >= g.n() || owner[v] != -1) return false;
    owner[v] = -2;
  }
  int covered = k;
  std::set<int> centers;
  for (size_t pi = 0; pi < d.petals.size(); ++pi) {
    const auto& petal = d.petals[pi];
    if (petal.center_index < 0 || petal.center_index >= k) return false;
    if (!centers.insert(petal.center_index).second) return false;
    if (petal.path.empty()) return false;
    for (int v : petal.path) {
      if (v < 0 || v >= g.n() || owner[v] != -1) return false;
      owner[v] = static_cast<int>(pi);
      ++covered;
    }
    if (!is_induced_path(g, petal.path)) return false;
  }
  if (covered != g.n()) return false;

  // per-petal attachment rules
  std::vector<std::vector<char>> center_adj(d.petals.size());
  for (size_t pi = 0; pi < d.petals.size(); ++pi) {
    const auto& petal = d.petals[pi];
    int c = hole[petal.center_index];
    int pred = hole[(petal.center_index + k - 1) % k];
    int succ = hole[(petal.center_index + 1) % k];
    const auto& p = petal.path;
    if (!g.adjacent(p.front(), pred) || !g.adjacent(p.back(), succ)) return false;
    bool interior_hit = false;
    for (size_t i = 1; i + 1 < p.size(); ++i)
      if (g.adjacent(p[i], c)) interior_hit = true;
    if (!interior_hit) return false;
    // no edge of pred-x..y-succ with both endpoints adjacent to the center
    std::vector<int> ext{pred};
    ext.insert(ext.end(), p.begin(), p.end());
    ext.push_back(succ);
    for (size_t i = 0; i + 1 < ext.size(); ++i)
      if (g.adjacent(ext[i], c) && g.adjacent(ext[i + 1], c)) return false;
  }

  // centers induce a subpath of the hole or the whole hole
  if (!centers.empty() && static_cast<int>(centers.size()) < k) {
    std::vector<char> is_center(k, 0);
    for (int c : centers) is_center[c] = 1;
    int runs = 0;
    for (int i = 0; i < k; ++i)
      if (is_center[i] && !is_center[(i + k - 1) % k]) ++runs;
    if (runs != 1) return false;
  }

  // edge discipline: every edge is a hole edge, a petal edge, an end
  // attachment, or a center-to-interior edge
  for (auto [u, v] : g.edges()) {
    int ou = owner[u], ov = owner[v];
    if (ou == -2 && ov == -2) {
      int pu = -1, pv = -1;
      for (int i = 0; i < k; ++i) {
        if (hole[i] == u) pu = i;
        if (hole[i] == v) pv = i;
      }
      int diff = (pu - pv + k) % k;
      if (diff != 1 && diff != k - 1) return false;
      continue;
    }
    if (ou >= 0 && ov >= 0) {
      if (ou != ov) return false;
      const auto& p = d.petals[ou].path;
      int iu = -1, iv = -1;
      for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == u) iu = static_cast<int>(i);
        if (p[i] == v) iv = static_cast<int>(i);
      }
      if (std::abs(iu - iv) != 1) return false;
      continue;
    }
    // hole-petal edge
    int hv = ou == -2 ? u : v;
    int pv2 = ou == -2 ? v : u;
    int pi = ou == -2 ? ov : ou;
    const auto& petal = d.petals[pi];
    int c = hole[petal.center_index];
    int pred = hole[(petal.center_index + k - 1) % k];
    int succ = hole[(petal.center_index + 1) % k];
    const auto& p = petal.path;
    bool ok = (hv == pred && pv2 == p.front()) || (hv == succ && pv2 == p.back());
    if (!ok && hv == c) {
      for (size_t i = 1; i + 1 < p.size(); ++i)
        if (p[i] == pv2) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

DaisyClass classify_daisy(const Graph& g, const DaisyDescriptor& d) {
  DaisyClass out;
  out.k = static_cast<int>(d.base_hole.size());
  out.full = static_cast<int>(d.petals.size()) == out.k;
  out.hole_odd = out.k % 2 == 1;
  bool ewf = true, sectors_odd = true, sectors_even = true;
  for (const auto& petal : d.petals) {
    int c = d.base_hole[petal.center_index];
    int pred = d.base_hole[(petal.center_index + out.k - 1) % out.k];
    int succ = d.base_hole[(petal.center_index + 1) % out.k];
    std::vector<int> ext{pred};
    ext.insert(ext.end(), petal.path.begin(), petal.path.end());
    ext.push_back(succ);
    std::vector<int> marks;
    for (size_t i = 0; i < ext.size(); ++i)
      if (g.adjacent(ext[i], c)) marks.push_back(static_cast<int>(i));
    out.petal_center_neighbor_counts.push_back(static_cast<int>(marks.size()) - 2);
    std::vector<int> secs;
    for (size_t i = 0; i + 1 < marks.size(); ++i)
      secs.push_back(marks[i + 1] - marks[i]);
    for (int s : secs) {
      if (s % 2 == 0) sectors_odd = false;
      if (s % 2 == 1) sectors_even = false;
    }
    out.external_sector_lengths.push_back(std::move(secs));
    if (out.petal_center_neighbor_counts.back() % 2 == 0) ewf = false;
  }
  out.even_wheel_free = ewf;
  out.even_hole_free = ewf && out.hole_odd && sectors_odd;
  out.bipartite = !out.hole_odd && sectors_even;
  return out;
}

std::optional<BasicKind> recognize_basic(const Graph& g) {
  int n = g.n();
  if (n == 0) return std::nullopt;
  if (n == 1) return BasicKind{BasicType::K1, std::nullopt};
  if (n == 2) {
    if (g.adjacent(0, 1)) return BasicKind{BasicType::K2, std::nullopt};
    return std::nullopt;
  }
  if (auto cyc = as_cycle(g)) {
    DaisyDescriptor d;
    d.base_hole = *cyc;
    if (verify_daisy(g, d)) return BasicKind{BasicType::Daisy, d};
    return std::nullopt;
  }
  if (n == 8 && isomorphic(g, reference_cube()))
    return BasicKind{BasicType::Cube, std::nullopt};
  if (auto wheel = recognize_wheel(g)) return wheel;
  return recognize_multi_petal(g);
}

}  // namespace ttw
