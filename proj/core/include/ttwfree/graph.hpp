#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ttw {

// Simple undirected graph on dense vertex ids 0..n-1.
// Immutable after construction; adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

// A path whose consecutive vertices are adjacent and whose non-consecutive
// vertices are non-adjacent in the host graph.
using InducedPath = std::vector<int>;

// Cyclic vertex sequence of length >= 4, consecutive adjacent, no chords.
using Hole = std::vector<int>;

bool is_induced_path(const Graph& g, const InducedPath& p);
bool is_hole(const Graph& g, const Hole& h);

// Canonical form of a cyclic sequence: lexicographically smallest rotation
// over both directions, starting at the smallest vertex.
Hole canonical_cycle(const Hole& h);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> orig_ids;  // new id -> old id
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s);

// Components as sorted vertex lists, ordered by smallest contained vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Connectivity of g restricted to `allowed` (which need not be all vertices).
bool connected_within(const Graph& g, std::span<const int> allowed);

// Shortest path from a to b whose internal vertices lie in `allowed` and,
// when `forbidden_neighbors_of` is set, avoid the neighborhood of that
// vertex. Ties broken toward the lexicographically smallest vertex sequence.
// The result is an induced path; absence is a valid answer.
std::optional<InducedPath> shortest_path_within(
    const Graph& g, int a, int b, std::span<const int> allowed,
    std::optional<int> forbidden_neighbors_of = std::nullopt);

// Small-graph isomorphism by backtracking on degree-compatible mappings.
bool isomorphic(const Graph& a, const Graph& b);

std::string to_string(const Graph& g);

}  // namespace ttw
