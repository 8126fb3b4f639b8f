#include "ttwfree/ears.hpp"

#include <algorithm>
#include <set>

namespace ttw {

bool is_ear_shape(const Graph& g, const Ear& e) {
  const auto& p = e.path;
  if (p.empty()) return false;
  int x = p.front(), y = p.back();
  if (e.a == e.b || e.a == e.c || e.b == e.c) return false;
  for (int v : p)
    if (v == e.a || v == e.b || v == e.c) return false;
  if (!is_induced_path(g, p)) return false;
  if (g.degree(x) != 2 || g.degree(y) != 2) return false;
  if (!g.adjacent(x, e.a) || !g.adjacent(y, e.b)) return false;
  if (!g.adjacent(e.a, e.c) || !g.adjacent(e.b, e.c)) return false;
  bool some_interior = false;
  for (size_t i = 1; i + 1 < p.size(); ++i) {
    int v = p[i];
    if (g.degree(v) == 2) continue;
    if (g.degree(v) == 3 && g.adjacent(v, e.c)) {
      some_interior = true;
      continue;
    }
    return false;
  }
  if (!some_interior) return false;
  // interiors attach to c only; ends attach to a (resp. b) only
  for (size_t i = 0; i < p.size(); ++i) {
    for (int w : g.neighbors(p[i])) {
      bool in_path = false;
      for (int q : p)
        if (q == w) in_path = true;
      if (in_path) continue;
      if (i == 0 && w == e.a) continue;
      if (i + 1 == p.size() && w == e.b) continue;
      if (i > 0 && i + 1 < p.size() && w == e.c) continue;
      return false;
    }
  }
  return true;
}

std::vector<Ear> find_ears(const Graph& g) {
  std::vector<Ear> cands;
  std::set<std::vector<int>> seen;

  for (int c = 0; c < g.n(); ++c) {
    const auto& nb = g.neighbors(c);
    for (int a : nb)
      for (int b : nb) {
        if (a == b) continue;
        // grow from each degree-2 neighbor of a, away from a
        for (int x : g.neighbors(a)) {
          if (x == c || x == b || g.degree(x) != 2) continue;
          InducedPath p{x};
          int prev = a, cur = x;
          bool ok = true;
          while (true) {
            int deg = g.degree(cur);
            if (deg == 2 && cur != x && g.adjacent(cur, b)) break;  // reached y
            int next = -1;
            if (deg == 2) {
              for (int w : g.neighbors(cur))
                if (w != prev) next = w;
            } else if (deg == 3 && g.adjacent(cur, c)) {
              for (int w : g.neighbors(cur))
                if (w != prev && w != c) next = w;
            } else {
              ok = false;
              break;
            }
            if (next < 0 || next == a || next == b || next == c) {
              // single-vertex ear: x itself adjacent to both a and b
              if (p.size() == 1 && g.adjacent(x, b) && next == b) break;
              ok = false;
              break;
            }
            bool revisit = false;
            for (int q : p)
              if (q == next) revisit = true;
            if (revisit) {
              ok = false;
              break;
            }
            p.push_back(next);
            prev = cur;
            cur = next;
          }
          if (!ok) continue;
          Ear e{p, a, b, c};
          if (!is_ear_shape(g, e)) continue;
          // canonical orientation
          if (p.size() >= 2 && p.back() < p.front()) {
            std::reverse(e.path.begin(), e.path.end());
            std::swap(e.a, e.b);
          }
          std::vector<int> key = e.path;
          key.push_back(e.a);
          key.push_back(e.b);
          key.push_back(e.c);
          if (seen.insert(key).second) cands.push_back(std::move(e));
        }
      }
  }

  // keep only maximal ears (no other candidate strictly contains the path)
  std::vector<Ear> out;
  for (const auto& e : cands) {
    bool contained = false;
    for (const auto& f : cands) {
      if (f.path.size() <= e.path.size()) continue;
      // e.path a contiguous subpath of f.path (either direction)?
      for (int dir = 0; dir < 2 && !contained; ++dir) {
        InducedPath probe = e.path;
        if (dir == 1) std::reverse(probe.begin(), probe.end());
        for (size_t s = 0; s + probe.size() <= f.path.size(); ++s) {
          bool match = true;
          for (size_t i = 0; i < probe.size() && match; ++i)
            if (f.path[s + i] != probe[i]) match = false;
          if (match) {
            contained = true;
            break;
          }
        }
      }
      if (contained) break;
    }
    if (!contained) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [](const Ear& l, const Ear& r) {
    if (l.path != r.path) return l.path < r.path;
    return std::tie(l.a, l.b, l.c) < std::tie(r.a, r.b, r.c);
  });
  return out;
}

}  // namespace ttw
