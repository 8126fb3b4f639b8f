#include "ttwfree/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace ttw {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.m_ += static_cast<int>(nb.size());
  }
  g.m_ /= 2;
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool is_induced_path(const Graph& g, const InducedPath& p) {
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j]) return false;
      bool want = (j == i + 1);
      if (g.adjacent(p[i], p[j]) != want) return false;
    }
  return true;
}

bool is_hole(const Graph& g, const Hole& h) {
  size_t k = h.size();
  if (k < 4) return false;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      if (h[i] == h[j]) return false;
      bool want = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(h[i], h[j]) != want) return false;
    }
  return true;
}

Hole canonical_cycle(const Hole& h) {
  size_t k = h.size();
  if (k == 0) return {};
  Hole best;
  for (int dir = 0; dir < 2; ++dir) {
    for (size_t s = 0; s < k; ++s) {
      Hole cand(k);
      for (size_t i = 0; i < k; ++i) {
        size_t idx = dir == 0 ? (s + i) % k : (s + k - i) % k;
        cand[i] = h[idx];
      }
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
  std::vector<int> ids(s.begin(), s.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<int> new_id(g.n(), -1);
  for (size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0 || ids[i] >= g.n())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    new_id[ids[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u : ids)
    for (int v : g.neighbors(u))
      if (u < v && new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);
  InducedSubgraph out;
  out.graph = Graph::from_edges(static_cast<int>(ids.size()), edges);
  out.orig_ids = std::move(ids);
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool connected_within(const Graph& g, std::span<const int> allowed) {
  if (allowed.empty()) return true;
  std::vector<char> in(g.n(), 0), seen(g.n(), 0);
  for (int v : allowed) in[v] = 1;
  std::vector<int> stack{allowed[0]};
  seen[allowed[0]] = 1;
  size_t count = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++count;
    for (int v : g.neighbors(u))
      if (in[v] && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  return count == allowed.size();
}

std::optional<InducedPath> shortest_path_within(
    const Graph& g, int a, int b, std::span<const int> allowed,
    std::optional<int> forbidden_neighbors_of) {
  if (a == b) return InducedPath{a};
  std::vector<char> ok(g.n(), 0);
  for (int v : allowed) ok[v] = 1;
  if (forbidden_neighbors_of) {
    for (int v : g.neighbors(*forbidden_neighbors_of)) ok[v] = 0;
  }
  ok[a] = 0;  // internal vertices only; endpoints handled separately
  ok[b] = 0;

  // BFS from b so that a greedy walk from a picks the lexicographically
  // smallest shortest sequence.
  std::vector<int> dist(g.n(), -1);
  std::queue<int> q;
  dist[b] = 0;
  q.push(b);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (dist[v] >= 0) continue;
      if (v != a && !ok[v]) continue;
      dist[v] = dist[u] + 1;
      if (v != a) q.push(v);
    }
  }
  if (dist[a] < 0) return std::nullopt;

  InducedPath path{a};
  int cur = a;
  while (cur != b) {
    int next = -1;
    for (int v : g.neighbors(cur)) {
      if (v == b && dist[cur] == 1) {
        next = v;
        break;
      }
      if (ok[v] && dist[v] == dist[cur] - 1) {
        next = v;
        break;
      }
    }
    path.push_back(next);
    cur = next;
  }
  return path;
}

namespace {

bool iso_extend(const Graph& a, const Graph& b, std::vector<int>& map,
                std::vector<char>& used, int u) {
  if (u == a.n()) return true;
  for (int v = 0; v < b.n(); ++v) {
    if (used[v] || a.degree(u) != b.degree(v)) continue;
    bool fits = true;
    for (int w = 0; w < u && fits; ++w)
      if (a.adjacent(u, w) != b.adjacent(v, map[w])) fits = false;
    if (!fits) continue;
    map[u] = v;
    used[v] = 1;
    if (iso_extend(a, b, map, used, u + 1)) return true;
    used[v] = 0;
  }
  return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(a.n(), -1);
  std::vector<char> used(b.n(), 0);
  return iso_extend(a, b, map, used, 0);
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.n() << " m=" << g.edge_count() << " {";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) os << ", ";
    os << u << "-" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace ttw
