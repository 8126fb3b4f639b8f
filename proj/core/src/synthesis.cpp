#include "ttwfree/synthesis.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ttwfree/analyze.hpp"
#include "ttwfree/ears.hpp"
#include "ttwfree/separators.hpp"

namespace ttw {

namespace {

[[noreturn]] void clause(const std::string& msg) {
  throw std::invalid_argument("glue: " + msg);
}

void check_marker_base(const Graph& g, int a, int b, const InducedPath& m,
                       const char* side) {
  if (m.size() < 3) clause(std::string(side) + " marker shorter than length 2");
  if (m.front() != a || m.back() != b)
    clause(std::string(side) + " marker does not join the seam vertices");
  if (!is_induced_path(g, m)) clause(std::string(side) + " marker not an induced path");
}

GlueResult glue_clique(const CliqueGlue& r) {
  if (r.parts.size() < 2) clause("clique gluing needs at least two parts");
  size_t l = r.parts[0].clique.size();
  if (l > 2) clause("clique larger than two vertices");
  for (const auto& part : r.parts) {
    if (part.clique.size() != l) clause("parts disagree on the clique size");
    for (int v : part.clique)
      if (v < 0 || v >= part.graph.n()) clause("clique vertex out of range");
    for (size_t i = 0; i < l; ++i)
      for (size_t j = i + 1; j < l; ++j) {
        if (part.clique[i] == part.clique[j]) clause("repeated clique vertex");
        if (!part.graph.adjacent(part.clique[i], part.clique[j]))
          clause("chosen set is not a clique");
      }
  }
  GlueResult out;
  int next = static_cast<int>(l);
  std::vector<std::pair<int, int>> edges;
  for (const auto& part : r.parts) {
    std::vector<int> map(part.graph.n(), -1);
    for (size_t j = 0; j < l; ++j) map[part.clique[j]] = static_cast<int>(j);
    for (int v = 0; v < part.graph.n(); ++v)
      if (map[v] < 0) map[v] = next++;
    for (auto [u, v] : part.graph.edges()) edges.emplace_back(map[u], map[v]);
    out.part_ids.push_back(std::move(map));
  }
  out.graph = Graph::from_edges(next, edges);
  return out;
}

GlueResult glue_two(const TwoSepGlue& r) {
  for (const auto* p : {&r.x, &r.y}) {
    const char* side = p == &r.x ? "x" : "y";
    if (p->a < 0 || p->a >= p->graph.n() || p->b < 0 || p->b >= p->graph.n() ||
        p->a == p->b)
      clause("seam vertices invalid");
    check_marker_base(p->graph, p->a, p->b, p->marker, side);
    for (size_t i = 1; i + 1 < p->marker.size(); ++i)
      if (p->graph.degree(p->marker[i]) != 2)
        clause(std::string(side) + " marker interior vertex without degree 2");
  }
  GlueResult out;
  std::vector<std::pair<int, int>> edges;
  int next = 2;
  auto emit = [&](const TwoSepGluePart& p) {
    std::vector<int> map(p.graph.n(), -1);
    std::vector<char> drop(p.graph.n(), 0);
    for (size_t i = 1; i + 1 < p.marker.size(); ++i) drop[p.marker[i]] = 1;
    map[p.a] = 0;
    map[p.b] = 1;
    for (int v = 0; v < p.graph.n(); ++v)
      if (map[v] < 0 && !drop[v]) map[v] = next++;
    for (auto [u, v] : p.graph.edges())
      if (!drop[u] && !drop[v]) edges.emplace_back(map[u], map[v]);
    out.part_ids.push_back(std::move(map));
  };
  emit(r.x);
  emit(r.y);
  out.graph = Graph::from_edges(next, edges);
  return out;
}

GlueResult glue_p3(const P3Glue& r) {
  for (const auto* p : {&r.x, &r.y}) {
    const char* side = p == &r.x ? "x" : "y";
    const Graph& g = p->graph;
    if (p->a < 0 || p->b < 0 || p->c < 0 || p->a >= g.n() || p->b >= g.n() ||
        p->c >= g.n())
      clause("seam vertices out of range");
    if (!g.adjacent(p->a, p->c) || !g.adjacent(p->c, p->b) ||
        g.adjacent(p->a, p->b))
      clause(std::string(side) + " seam is not an induced length-2 path");
    check_marker_base(g, p->a, p->b, p->marker, side);
    for (int v : p->marker)
      if (v == p->c) clause(std::string(side) + " marker passes through the middle vertex");
  }
  {  // x side: marker interiors of degree 2, or degree 3 and adjacent to c
    const auto& p = r.x;
    int c_hits = 0;
    for (size_t i = 1; i + 1 < p.marker.size(); ++i) {
      int v = p.marker[i];
      int d = p.graph.degree(v);
      bool adj = p.graph.adjacent(v, p.c);
      if (adj) ++c_hits;
      if (!(d == 2 || (d == 3 && adj)))
        clause("x marker interior vertex neither degree 2 nor an attached degree 3");
    }
    if (c_hits == 0) clause("x marker has no interior neighbor of the middle vertex");
    std::vector<int> allowed;
    for (int v = 0; v < p.graph.n(); ++v)
      if (v != p.c) allowed.push_back(v);
    if (!shortest_path_within(p.graph, p.a, p.b, allowed, p.c))
      clause("x part has no seam path avoiding the middle vertex's neighborhood");
  }
  {  // y side: marker avoids N(c), degree-2 interiors, and is the unique
     // seam path doing so
    const auto& p = r.y;
    std::vector<char> in_h(p.graph.n(), 1);
    in_h[p.c] = 0;
    for (int v : p.graph.neighbors(p.c))
      if (v != p.a && v != p.b) in_h[v] = 0;
    for (size_t i = 1; i + 1 < p.marker.size(); ++i) {
      int v = p.marker[i];
      if (p.graph.degree(v) != 2)
        clause("y marker interior vertex without degree 2");
      if (!in_h[v]) clause("y marker interior touches the middle vertex's neighborhood");
    }
    for (size_t i = 1; i + 1 < p.marker.size(); ++i) {
      // deleting any interior vertex must cut a from b within the reduced graph
      std::vector<int> allowed;
      for (int v = 0; v < p.graph.n(); ++v)
        if (in_h[v] && v != p.a && v != p.b && v != p.marker[i]) allowed.push_back(v);
      if (shortest_path_within(p.graph, p.a, p.b, allowed))
        clause("y part has a second seam path avoiding the middle vertex's neighborhood");
    }
  }
  GlueResult out;
  std::vector<std::pair<int, int>> edges;
  int next = 3;
  auto emit = [&](const P3GluePart& p) {
    std::vector<int> map(p.graph.n(), -1);
    std::vector<char> drop(p.graph.n(), 0);
    for (size_t i = 1; i + 1 < p.marker.size(); ++i) drop[p.marker[i]] = 1;
    map[p.a] = 0;
    map[p.c] = 1;
    map[p.b] = 2;
    for (int v = 0; v < p.graph.n(); ++v)
      if (map[v] < 0 && !drop[v]) map[v] = next++;
    for (auto [u, v] : p.graph.edges())
      if (!drop[u] && !drop[v]) edges.emplace_back(map[u], map[v]);
    out.part_ids.push_back(std::move(map));
  };
  emit(r.x);
  emit(r.y);
  out.graph = Graph::from_edges(next, edges);
  return out;
}

}  // namespace

GlueResult glue(const GluingRecipe& recipe) {
  if (std::holds_alternative<CliqueGlue>(recipe))
    return glue_clique(std::get<CliqueGlue>(recipe));
  if (std::holds_alternative<TwoSepGlue>(recipe))
    return glue_two(std::get<TwoSepGlue>(recipe));
  return glue_p3(std::get<P3Glue>(recipe));
}

// --------------------------------------------------------------- recipes

namespace {

void emit_graph(std::ostream& os, const Graph& g) {
  os << g.n() << ' ' << g.edge_count();
  for (auto [u, v] : g.edges()) os << ' ' << u << ' ' << v;
}

Graph read_graph(std::istringstream& is) {
  int n, m;
  if (!(is >> n >> m)) throw std::invalid_argument("recipe: truncated part header");
  std::vector<std::pair<int, int>> edges(m);
  for (auto& [u, v] : edges)
    if (!(is >> u >> v)) throw std::invalid_argument("recipe: truncated edge list");
  return Graph::from_edges(n, edges);
}

std::vector<int> read_ints(std::istringstream& is, int count) {
  std::vector<int> out(count);
  for (auto& v : out)
    if (!(is >> v)) throw std::invalid_argument("recipe: truncated vertex list");
  return out;
}

}  // namespace

std::string recipe_to_text(const GluingRecipe& recipe) {
  std::ostringstream os;
  if (const auto* cg = std::get_if<CliqueGlue>(&recipe)) {
    os << "clique-glue " << cg->parts.size() << "\n";
    for (const auto& p : cg->parts) {
      os << "part ";
      emit_graph(os, p.graph);
      os << " clique " << p.clique.size();
      for (int v : p.clique) os << ' ' << v;
      os << "\n";
    }
  } else if (const auto* tg = std::get_if<TwoSepGlue>(&recipe)) {
    os << "two-sep-glue\n";
    for (const auto* p : {&tg->x, &tg->y}) {
      os << "part ";
      emit_graph(os, p->graph);
      os << " seam " << p->a << ' ' << p->b << " marker " << p->marker.size();
      for (int v : p->marker) os << ' ' << v;
      os << "\n";
    }
  } else {
    const auto& pg = std::get<P3Glue>(recipe);
    os << "p3-glue\n";
    for (const auto* p : {&pg.x, &pg.y}) {
      os << "part ";
      emit_graph(os, p->graph);
      os << " seam " << p->a << ' ' << p->c << ' ' << p->b << " marker "
         << p->marker.size();
      for (int v : p->marker) os << ' ' << v;
      os << "\n";
    }
  }
  return os.str();
}

GluingRecipe recipe_from_text(const std::string& text) {
  std::istringstream lines(text);
  std::string header;
  std::getline(lines, header);
  std::istringstream hs(header);
  std::string kind;
  hs >> kind;

  auto next_part_stream = [&]() {
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      std::istringstream is(line);
      std::string tag;
      is >> tag;
      if (tag != "part") throw std::invalid_argument("recipe: expected a part line");
      return is;
    }
    throw std::invalid_argument("recipe: missing part line");
  };
  auto expect = [&](std::istringstream& is, const char* word) {
    std::string w;
    is >> w;
    if (w != word) throw std::invalid_argument("recipe: malformed part line");
  };

  if (kind == "clique-glue") {
    int parts = 0;
    hs >> parts;
    CliqueGlue out;
    for (int i = 0; i < parts; ++i) {
      auto is = next_part_stream();
      CliqueGluePart p;
      p.graph = read_graph(is);
      expect(is, "clique");
      int l;
      is >> l;
      p.clique = read_ints(is, l);
      out.parts.push_back(std::move(p));
    }
    return out;
  }
  if (kind == "two-sep-glue") {
    TwoSepGlue out;
    for (auto* p : {&out.x, &out.y}) {
      auto is = next_part_stream();
      p->graph = read_graph(is);
      expect(is, "seam");
      is >> p->a >> p->b;
      expect(is, "marker");
      int k;
      is >> k;
      p->marker = read_ints(is, k);
    }
    return out;
  }
  if (kind == "p3-glue") {
    P3Glue out;
    for (auto* p : {&out.x, &out.y}) {
      auto is = next_part_stream();
      p->graph = read_graph(is);
      expect(is, "seam");
      is >> p->a >> p->c >> p->b;
      expect(is, "marker");
      int k;
      is >> k;
      p->marker = read_ints(is, k);
    }
    return out;
  }
  throw std::invalid_argument("recipe: unknown kind '" + kind + "'");
}

// --------------------------------------------------------------- members

namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int pick(int lo, int hi) {  // inclusive
    return static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1)) + lo;
  }
  bool chance(int percent) { return pick(1, 100) <= percent; }
  template <typename T>
  const T& choose(const std::vector<T>& v) {
    return v[pick(0, static_cast<int>(v.size()) - 1)];
  }
};

int pick_parity(Rng& rng, int lo, int hi, std::optional<int> parity) {
  for (;;) {
    int v = rng.pick(lo, hi);
    if (!parity || v % 2 == *parity) return v;
  }
}

Graph make_hole_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph::from_edges(k, e);
}

Graph sample_hole(Rng& rng, std::optional<Subclass> sub, int max_len = 11) {
  std::optional<int> parity;
  if (sub == Subclass::EvenHoleFree) parity = 1;
  if (sub == Subclass::Bipartite) parity = 0;
  int hi = std::max(5, std::min(11, max_len));
  return make_hole_graph(pick_parity(rng, 4, hi, parity));
}

struct WheelSample {
  Graph graph;
  int center;
  std::vector<int> spokes;  // rim positions 0..k-1, ascending
  int rim_len;
};

WheelSample sample_wheel(Rng& rng, std::optional<Subclass> sub) {
  int s = (sub == Subclass::EvenWheelFree || sub == Subclass::EvenHoleFree)
              ? (rng.chance(70) ? 3 : 5)
              : rng.pick(3, 5);
  std::optional<int> sector_parity;
  if (sub == Subclass::EvenHoleFree) sector_parity = 1;
  if (sub == Subclass::Bipartite) sector_parity = 0;
  std::vector<int> lens(s);
  for (auto& l : lens)
    l = sector_parity ? (*sector_parity == 1 ? (rng.chance(70) ? 3 : 5)
                                             : (rng.chance(70) ? 2 : 4))
                      : rng.pick(2, 4);
  WheelSample w;
  w.rim_len = 0;
  for (int l : lens) w.rim_len += l;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < w.rim_len; ++i) e.emplace_back(i, (i + 1) % w.rim_len);
  w.center = w.rim_len;
  int pos = 0;
  for (int l : lens) {
    w.spokes.push_back(pos);
    e.emplace_back(w.center, pos);
    pos += l;
  }
  w.graph = Graph::from_edges(w.rim_len + 1, e);
  return w;
}

struct DaisySample {
  Graph graph;
  DaisyDescriptor desc;
};

DaisySample sample_daisy(Rng& rng, std::optional<Subclass> sub, int min_petals) {
  std::optional<int> hole_parity, gap_parity;
  if (sub == Subclass::EvenHoleFree) {
    hole_parity = 1;
    gap_parity = 1;
  }
  if (sub == Subclass::Bipartite) {
    hole_parity = 0;
    gap_parity = 0;
  }
  bool odd_marks = sub == Subclass::EvenWheelFree || sub == Subclass::EvenHoleFree;

  int k = pick_parity(rng, std::max(4, min_petals), 8, hole_parity);
  int petals = rng.pick(min_petals, k);
  int start = rng.pick(0, k - 1);

  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  int next = k;
  DaisyDescriptor desc;
  desc.base_hole.resize(k);
  for (int i = 0; i < k; ++i) desc.base_hole[i] = i;

  for (int pi = 0; pi < petals; ++pi) {
    int ci = (start + pi) % k;
    int marks = odd_marks ? (rng.chance(75) ? 1 : 3) : rng.pick(1, 3);
    std::vector<int> gaps(marks + 1);
    for (auto& gp : gaps)
      gp = gap_parity ? (*gap_parity == 1 ? (rng.chance(75) ? 3 : 5)
                                          : (rng.chance(75) ? 2 : 4))
                      : rng.pick(2, 4);
    int total = 0;
    for (int gp : gaps) total += gp;
    int len = total - 1;  // petal vertex count
    InducedPath path(len);
    for (int i = 0; i < len; ++i) path[i] = next + i;
    for (int i = 0; i + 1 < len; ++i) e.emplace_back(path[i], path[i + 1]);
    e.emplace_back((ci + k - 1) % k, path.front());
    e.emplace_back(path.back(), (ci + 1) % k);
    int at = 0;
    for (int mi = 0; mi < marks; ++mi) {
      at += gaps[mi];
      e.emplace_back(ci, path[at - 1]);  // extended-path index 'at' -> path index at-1
    }
    desc.petals.push_back({ci, std::move(path)});
    next += len;
  }
  std::sort(desc.petals.begin(), desc.petals.end(),
            [](const Petal& a, const Petal& b) { return a.center_index < b.center_index; });
  DaisySample out;
  out.graph = Graph::from_edges(next, e);
  out.desc = std::move(desc);
  return out;
}

Graph sample_part(Rng& rng, std::optional<Subclass> sub) {
  int roll = rng.pick(1, 100);
  if (roll <= 35) return sample_hole(rng, sub);
  if (roll <= 65) return sample_wheel(rng, sub).graph;
  if (roll <= 90) return sample_daisy(rng, sub, rng.chance(40) ? 2 : 0).graph;
  if (sub != Subclass::EvenHoleFree) return reference_cube();
  return sample_hole(rng, sub);
}

// seam material for 2-separator gluings: a..b paths whose interior is a
// nonempty stretch of degree-2 vertices
std::vector<TwoSepGluePart> two_seam_candidates(const Graph& g, size_t cap) {
  std::vector<TwoSepGluePart> out;
  std::vector<char> visited(g.n(), 0);
  auto try_marker = [&](InducedPath m) {
    if (out.size() >= cap) return;
    if (m.front() == m.back()) return;
    for (size_t i = 1; i + 1 < m.size(); ++i)
      if (m[i] == m.front() || m[i] == m.back()) return;
    if (!is_induced_path(g, m)) return;
    TwoSepGluePart p;
    p.a = m.front();
    p.b = m.back();
    p.marker = std::move(m);
    out.push_back(std::move(p));
  };

  for (int v = 0; v < g.n() && out.size() < cap; ++v) {
    if (visited[v] || g.degree(v) != 2) continue;
    // walk to one end of the degree-2 run (or detect a pure cycle)
    std::vector<int> run;
    int cur = v, prev = -1;
    bool cycle = false;
    for (;;) {
      int nxt = -1;
      for (int w : g.neighbors(cur))
        if (w != prev && g.degree(w) == 2) nxt = w;
      if (nxt < 0) break;
      if (nxt == v) {
        cycle = true;
        break;
      }
      prev = cur;
      cur = nxt;
    }
    if (cycle) {
      // collect the whole cycle once
      run.clear();
      prev = -1;
      cur = v;
      do {
        run.push_back(cur);
        visited[cur] = 1;
        int nxt = -1;
        for (int w : g.neighbors(cur))
          if (w != prev) nxt = w;
        prev = cur;
        cur = nxt;
      } while (cur != v);
      int len = static_cast<int>(run.size());
      for (int i = 0; i < len && out.size() < cap; ++i)
        for (int seg = 1; seg <= len - 3; ++seg) {
          InducedPath m{run[(i + len - 1) % len]};
          for (int t = 0; t < seg; ++t) m.push_back(run[(i + t) % len]);
          m.push_back(run[(i + seg) % len]);
          try_marker(std::move(m));
        }
      continue;
    }
    // linear run from the found end
    run.clear();
    int end = cur;
    prev = -1;
    cur = end;
    while (cur >= 0 && g.degree(cur) == 2) {
      run.push_back(cur);
      visited[cur] = 1;
      int nxt = -1;
      for (int w : g.neighbors(cur))
        if (w != prev) nxt = w;
      prev = cur;
      cur = nxt;
    }
    int after = cur;  // attachment past the run (degree != 2), may be -1
    int before = -1;
    for (int w : g.neighbors(run.front()))
      if (w != (run.size() > 1 ? run[1] : after)) before = w;
    int t = static_cast<int>(run.size());
    for (int i = 0; i < t && out.size() < cap; ++i)
      for (int j = i; j < t; ++j) {
        int a = i > 0 ? run[i - 1] : before;
        int b = j + 1 < t ? run[j + 1] : after;
        if (a < 0 || b < 0) continue;
        InducedPath m{a};
        for (int q = i; q <= j; ++q) m.push_back(run[q]);
        m.push_back(b);
        try_marker(std::move(m));
      }
  }
  return out;
}

std::vector<P3GluePart> p3_x_candidates(const WheelSample& w) {
  std::vector<P3GluePart> out;
  int k = w.rim_len, s = static_cast<int>(w.spokes.size());
  for (int i = 0; i < s; ++i) {
    int pa = w.spokes[i], pb = w.spokes[(i + 1) % s];
    P3GluePart p;
    p.graph = w.graph;
    p.a = pa;
    p.c = w.center;
    p.b = pb;
    // marker runs the long way around, through the other spokes
    InducedPath m{pa};
    for (int q = (pa + k - 1) % k; q != pb; q = (q + k - 1) % k) m.push_back(q);
    m.push_back(pb);
    if (m.size() < 3) continue;
    p.marker = std::move(m);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<P3GluePart> p3_y_candidates(const DaisySample& ds) {
  std::vector<P3GluePart> out;
  const auto& d = ds.desc;
  int k = static_cast<int>(d.base_hole.size());
  for (const auto& petal : d.petals) {
    int c = d.base_hole[petal.center_index];
    std::vector<int> ext{d.base_hole[(petal.center_index + k - 1) % k]};
    ext.insert(ext.end(), petal.path.begin(), petal.path.end());
    ext.push_back(d.base_hole[(petal.center_index + 1) % k]);
    std::vector<int> marks;
    for (size_t i = 0; i < ext.size(); ++i)
      if (ds.graph.adjacent(ext[i], c)) marks.push_back(static_cast<int>(i));
    for (size_t i = 0; i + 1 < marks.size(); ++i) {
      if (marks[i + 1] - marks[i] < 2) continue;
      P3GluePart p;
      p.graph = ds.graph;
      p.a = ext[marks[i]];
      p.c = c;
      p.b = ext[marks[i + 1]];
      p.marker.assign(ext.begin() + marks[i], ext.begin() + marks[i + 1] + 1);
      out.push_back(std::move(p));
    }
  }
  return out;
}

bool parity_ok_two(std::optional<Subclass> sub, const InducedPath& mx,
                   const InducedPath& my) {
  int lx = static_cast<int>(mx.size()) - 1, ly = static_cast<int>(my.size()) - 1;
  if (sub == Subclass::Bipartite) return lx % 2 == ly % 2;
  if (sub == Subclass::EvenHoleFree) return (lx + ly) % 2 == 1;
  return true;
}

bool parity_ok_p3(std::optional<Subclass> sub, const Graph& gx,
                  const P3GluePart& x, const P3GluePart& y) {
  int lx = static_cast<int>(x.marker.size()) - 1,
      ly = static_cast<int>(y.marker.size()) - 1;
  if (sub == Subclass::Bipartite && lx % 2 != ly % 2) return false;
  if (sub == Subclass::EvenHoleFree && (lx + ly) % 2 != 1) return false;
  if (sub == Subclass::EvenWheelFree || sub == Subclass::EvenHoleFree) {
    int hits = 0;
    for (size_t i = 1; i + 1 < x.marker.size(); ++i)
      if (gx.adjacent(x.marker[i], x.c)) ++hits;
    if (hits % 2 != 1) return false;
  }
  return true;
}

std::optional<Graph> try_p3_product(Rng& rng, std::optional<Subclass> sub) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto wheel = sample_wheel(rng, sub);
    auto daisy = sample_daisy(rng, sub, 2);
    auto xs = p3_x_candidates(wheel);
    auto ys = p3_y_candidates(daisy);
    if (xs.empty() || ys.empty()) continue;
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < xs.size(); ++i)
      for (size_t j = 0; j < ys.size(); ++j)
        if (parity_ok_p3(sub, wheel.graph, xs[i], ys[j]))
          pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    while (!pairs.empty()) {
      int idx = rng.pick(0, static_cast<int>(pairs.size()) - 1);
      auto [i, j] = pairs[idx];
      pairs.erase(pairs.begin() + idx);
      try {
        return glue(P3Glue{xs[i], ys[j]}).graph;
      } catch (const std::invalid_argument&) {
      }
    }
  }
  return std::nullopt;
}

Graph clique_merge(Rng& rng, const Graph& g, const Graph& part) {
  CliqueGlue r;
  int l;
  if (rng.chance(4) || g.edge_count() == 0 || part.edge_count() == 0)
    l = (g.n() > 0 && part.n() > 0 && rng.chance(60)) ? 1 : 0;
  else
    l = rng.chance(55) ? 2 : 1;
  auto pick_clique = [&](const Graph& h) -> std::vector<int> {
    if (l == 0) return {};
    if (l == 1) return {rng.pick(0, h.n() - 1)};
    auto es = h.edges();
    auto [u, v] = es[rng.pick(0, static_cast<int>(es.size()) - 1)];
    return {u, v};
  };
  r.parts.push_back({g, pick_clique(g)});
  r.parts.push_back({part, pick_clique(part)});
  return glue(r).graph;
}

std::optional<Graph> try_two_merge(Rng& rng, std::optional<Subclass> sub,
                                   const Graph& g, const Graph& part) {
  auto gc = two_seam_candidates(g, 48);
  auto pc = two_seam_candidates(part, 48);
  if (gc.empty() || pc.empty()) return std::nullopt;
  for (int attempt = 0; attempt < 24; ++attempt) {
    auto& x = gc[rng.pick(0, static_cast<int>(gc.size()) - 1)];
    auto& y = pc[rng.pick(0, static_cast<int>(pc.size()) - 1)];
    if (!parity_ok_two(sub, x.marker, y.marker)) continue;
    TwoSepGlue r;
    r.x = x;
    r.x.graph = g;
    r.y = y;
    r.y.graph = part;
    try {
      return glue(r).graph;
    } catch (const std::invalid_argument&) {
    }
  }
  return std::nullopt;
}

bool subclass_flag(const ClassReport& rep, std::optional<Subclass> sub) {
  if (!sub) return true;
  switch (*sub) {
    case Subclass::EvenWheelFree:
      return rep.even_wheel_free;
    case Subclass::EvenHoleFree:
      return rep.even_hole_free;
    case Subclass::Bipartite:
      return rep.bipartite_theta_wac_free;
  }
  return false;
}

}  // namespace

Graph random_member(std::uint64_t seed, int target_size,
                    std::optional<Subclass> subclass, GenStats& stats) {
  if (target_size < 1) throw std::invalid_argument("random_member: size must be >= 1");
  Rng rng(seed);

  Graph g;
  if (target_size == 1) {
    g = Graph::from_edges(1, {});
  } else if (target_size <= 3) {
    g = Graph::from_edges(2, {{0, 1}});
    while (g.n() < target_size) {
      ++stats.clique_glues;
      g = glue(CliqueGlue{{{g, {g.n() - 1}}, {Graph::from_edges(2, {{0, 1}}), {0}}}}).graph;
    }
  } else {
    g = sample_hole(rng, subclass, target_size);
    for (int iter = 0; iter < 8 * target_size && g.n() < target_size; ++iter) {
      int roll = rng.pick(1, 100);
      if (roll <= 15 && target_size - g.n() >= 12) {
        if (auto prod = try_p3_product(rng, subclass)) {
          ++stats.p3_glues;
          ++stats.clique_glues;
          g = clique_merge(rng, g, *prod);
          continue;
        }
      }
      Graph part = sample_part(rng, subclass);
      if (roll <= 45) {
        if (auto merged = try_two_merge(rng, subclass, g, part)) {
          ++stats.two_glues;
          g = std::move(*merged);
          continue;
        }
      }
      ++stats.clique_glues;
      g = clique_merge(rng, g, part);
    }
  }

  auto rep = analyze(g);
  if (!rep.ttw_free || !subclass_flag(rep, subclass))
    throw std::logic_error("random_member: generated graph failed verification");
  return g;
}

Graph random_member(std::uint64_t seed, int target_size,
                    std::optional<Subclass> subclass) {
  GenStats stats;
  return random_member(seed, target_size, subclass, stats);
}

// --------------------------------------------------------------- good P3

bool is_good_p3(const Graph& g, int a, int c, int b, GoodP3Strategy strategy,
                const OracleLimits& limits) {
  if (a == b || a == c || b == c || a < 0 || b < 0 || c < 0 || a >= g.n() ||
      b >= g.n() || c >= g.n())
    throw std::invalid_argument("is_good_p3: bad vertices");
  if (!g.adjacent(a, c) || !g.adjacent(c, b) || g.adjacent(a, b))
    throw std::invalid_argument("is_good_p3: a-c-b is not an induced path");

  if (strategy == GoodP3Strategy::Enumeration) {
    if (g.n() > limits.pattern)
      throw SizeLimitError("is_good_p3(enumeration): size exceeds limit");
    std::vector<char> allowed(g.n(), 1);
    allowed[c] = 0;
    allowed[a] = allowed[b] = 0;
    bool good = true;
    // every induced a..b path avoiding c must avoid N(c) internally
    std::vector<int> path{a};
    std::vector<char> in_path(g.n(), 0);
    in_path[a] = 1;
    std::function<bool()> dfs = [&]() -> bool {
      int last = path.back();
      for (int u : g.neighbors(last)) {
        if (u == b) {
          bool induced = true;
          for (size_t i = 0; i + 1 < path.size() && induced; ++i)
            if (g.adjacent(b, path[i])) induced = false;
          if (induced) {
            for (size_t i = 1; i < path.size(); ++i)
              if (g.adjacent(path[i], c)) {
                good = false;
                return false;
              }
          }
          continue;
        }
        if (in_path[u] || !allowed[u]) continue;
        bool induced = true;
        for (size_t i = 0; i + 1 < path.size() && induced; ++i)
          if (g.adjacent(u, path[i])) induced = false;
        if (!induced) continue;
        path.push_back(u);
        in_path[u] = 1;
        bool go_on = dfs();
        path.pop_back();
        in_path[u] = 0;
        if (!go_on) return false;
      }
      return true;
    };
    dfs();
    return good;
  }

  // Characterization; assumes an atomic (theta, triangle)-free host
  if (find_pattern(g, PatternKind::Triangle))
    throw std::invalid_argument("is_good_p3(characterization): host has a triangle");
  if (find_clique_separator(g))
    throw std::invalid_argument("is_good_p3(characterization): host not atomic");
  if (g.n() > limits.pattern)
    throw SizeLimitError("is_good_p3(characterization): size exceeds limit");

  std::vector<int> allowed;
  for (int v = 0; v < g.n(); ++v)
    if (v != c) allowed.push_back(v);
  if (!shortest_path_within(g, a, b, allowed, c)) return false;  // no hole via a,c,b

  bool bad = false;
  enumerate_holes(g, [&](const Hole& h) {
    bool has_a = false, has_b = false, has_c = false;
    for (int v : h) {
      if (v == a) has_a = true;
      if (v == b) has_b = true;
      if (v == c) has_c = true;
    }
    if (has_a && has_b && !has_c) {
      // a wheel centered at c over this hole?
      if (neighbor_positions(g, h, c).size() >= 3) {
        bad = true;
        return false;
      }
    }
    if (has_a && has_b && has_c) {
      // a wheel centered at a neighbor of c with a, c, b on the rim?
      std::vector<char> in(g.n(), 0);
      for (int v : h) in[v] = 1;
      for (int c2 : g.neighbors(c)) {
        if (in[c2]) continue;
        if (neighbor_positions(g, h, c2).size() >= 3) {
          bad = true;
          return false;
        }
      }
    }
    return true;
  });
  return !bad;
}

// --------------------------------------------------------------- ears

Graph add_good_ear(const Graph& g, const EarProfile& step,
                   GoodP3Strategy strategy, const OracleLimits& limits) {
  if (step.length < 3)
    throw std::invalid_argument("add_good_ear: path needs at least 3 vertices");
  if (step.attach.empty())
    throw std::invalid_argument("add_good_ear: no interior attachment");
  for (size_t i = 0; i < step.attach.size(); ++i) {
    int p = step.attach[i];
    if (p < 1 || p > step.length - 2)
      throw std::invalid_argument("add_good_ear: attachment outside the interior");
    if (i > 0 && step.attach[i] <= step.attach[i - 1] + 1)
      throw std::invalid_argument(
          "add_good_ear: attachments repeated or on consecutive vertices");
  }
  if (!is_good_p3(g, step.a, step.c, step.b, strategy, limits))
    throw std::invalid_argument("add_good_ear: anchor is not a good P3");

  auto edges = g.edges();
  int base = g.n();
  edges.emplace_back(step.a, base);
  for (int i = 0; i + 1 < step.length; ++i) edges.emplace_back(base + i, base + i + 1);
  edges.emplace_back(base + step.length - 1, step.b);
  for (int p : step.attach) edges.emplace_back(step.c, base + p);
  return Graph::from_edges(base + step.length, edges);
}

EarSequence ear_sequence(const Graph& g, const OracleLimits& limits) {
  if (g.n() < 3) throw std::invalid_argument("ear_sequence: need >= 3 vertices");
  if (is_cube_graph(g)) throw std::invalid_argument("ear_sequence: the cube has no ears");
  if (find_clique_separator(g))
    throw std::invalid_argument("ear_sequence: input not atomic");

  EarSequence seq;
  std::vector<EarStepConcrete> reversed;
  std::vector<int> cur(g.n());
  for (int v = 0; v < g.n(); ++v) cur[v] = v;

  for (;;) {
    auto sub = induced_subgraph(g, cur);
    if (is_hole_graph(sub.graph)) {
      auto local = *find_pattern(sub.graph, PatternKind::Hole);
      for (int v : local.cycle) seq.base.push_back(sub.orig_ids[v]);
      break;
    }
    auto ears = find_ears(sub.graph);
    bool advanced = false;
    for (const auto& e : ears) {
      std::vector<char> drop(sub.graph.n(), 0);
      for (int v : e.path) drop[v] = 1;
      std::vector<int> rem;
      for (int v = 0; v < sub.graph.n(); ++v)
        if (!drop[v]) rem.push_back(sub.orig_ids[v]);
      auto grem = induced_subgraph(g, rem);
      if (find_clique_separator(grem.graph)) continue;
      if (is_cube_graph(grem.graph)) continue;
      auto local_of = [&](int orig) {
        for (int v = 0; v < grem.graph.n(); ++v)
          if (grem.orig_ids[v] == orig) return v;
        return -1;
      };
      int la = local_of(sub.orig_ids[e.a]), lb = local_of(sub.orig_ids[e.b]),
          lc = local_of(sub.orig_ids[e.c]);
      bool good;
      try {
        good = is_good_p3(grem.graph, la, lc, lb, GoodP3Strategy::Characterization,
                          limits);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (!good) continue;

      EarStepConcrete step;
      step.a = sub.orig_ids[e.a];
      step.c = sub.orig_ids[e.c];
      step.b = sub.orig_ids[e.b];
      for (int v : e.path) step.path.push_back(sub.orig_ids[v]);
      reversed.push_back(std::move(step));
      cur = rem;
      advanced = true;
      break;
    }
    if (!advanced)
      throw std::runtime_error("ear_sequence: no removable ear (is the input accepted?)");
  }

  seq.steps.assign(reversed.rbegin(), reversed.rend());
  return seq;
}

Graph replay_ear_sequence(const Graph& original, const EarSequence& seq) {
  std::vector<int> to_replay(original.n(), -1);
  int k = static_cast<int>(seq.base.size());
  Graph cur = [&] {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph::from_edges(k, e);
  }();
  for (int i = 0; i < k; ++i) to_replay[seq.base[i]] = i;

  for (const auto& step : seq.steps) {
    EarProfile prof;
    prof.a = to_replay[step.a];
    prof.c = to_replay[step.c];
    prof.b = to_replay[step.b];
    prof.length = static_cast<int>(step.path.size());
    for (int i = 0; i < prof.length; ++i)
      if (original.adjacent(step.path[i], step.c)) prof.attach.push_back(i);
    int base = cur.n();
    cur = add_good_ear(cur, prof, GoodP3Strategy::Characterization,
                       OracleLimits{.pattern = 1 << 20, .kuratowski = 14});
    for (int i = 0; i < prof.length; ++i) to_replay[step.path[i]] = base + i;
  }
  return cur;
}

std::string ear_sequence_to_text(const EarSequence& seq) {
  std::ostringstream os;
  os << "base " << seq.base.size();
  for (int v : seq.base) os << ' ' << v;
  os << "\n";
  for (const auto& s : seq.steps) {
    os << "ear " << s.a << ' ' << s.c << ' ' << s.b << ' ' << s.path.size();
    for (int v : s.path) os << ' ' << v;
    os << "\n";
  }
  return os.str();
}

EarSequence ear_sequence_from_text(const std::string& text) {
  EarSequence seq;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    std::string tag;
    is >> tag;
    if (tag == "base") {
      int k;
      is >> k;
      seq.base = read_ints(is, k);
    } else if (tag == "ear") {
      EarStepConcrete s;
      int len;
      is >> s.a >> s.c >> s.b >> len;
      s.path = read_ints(is, len);
      seq.steps.push_back(std::move(s));
    } else {
      throw std::invalid_argument("ear sequence: unknown line '" + tag + "'");
    }
  }
  return seq;
}

// --------------------------------------------------------------- gadget

GoodP3Gadget goodp3_gadget(const Graph& g, int c, int cprime) {
  if (c == cprime || c < 0 || cprime < 0 || c >= g.n() || cprime >= g.n())
    throw std::invalid_argument("goodp3_gadget: bad vertices");
  if (g.degree(c) != 2 || g.degree(cprime) != 2)
    throw std::invalid_argument("goodp3_gadget: both vertices need degree 2");
  if (g.adjacent(c, cprime))
    throw std::invalid_argument("goodp3_gadget: vertices must be non-adjacent");
  auto edges = g.edges();
  edges.emplace_back(c, cprime);
  GoodP3Gadget out;
  out.graph = Graph::from_edges(g.n(), edges);
  out.a = g.neighbors(c)[0];
  out.b = g.neighbors(c)[1];
  return out;
}

}  // namespace ttw
