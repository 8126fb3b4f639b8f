#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ttwfree/graph.hpp"

using namespace ttw;

TEST_CASE("induced subgraph basics") {
  auto c5 = th::cycle(5);
  std::vector<int> all{0, 1, 2, 3, 4};
  auto full = induced_subgraph(c5, all);
  CHECK(full.graph == c5);

  std::vector<int> three{0, 1, 2};
  auto p = induced_subgraph(c5, three);
  CHECK(p.graph.n() == 3);
  CHECK(p.graph.edge_count() == 2);
  CHECK(p.graph.adjacent(0, 1));
  CHECK(p.graph.adjacent(1, 2));
  CHECK(!p.graph.adjacent(0, 2));

  // one bipartition side of the cube is edgeless
  auto cube = reference_cube();
  std::vector<int> side{0, 1, 2, 3};
  auto sub = induced_subgraph(cube, side);
  CHECK(sub.graph.n() == 4);
  CHECK(sub.graph.edge_count() == 0);

  CHECK_THROWS_AS(induced_subgraph(c5, std::vector<int>{9}), std::invalid_argument);
}

TEST_CASE("connected components") {
  CHECK(connected_components(th::cycle(5)).size() == 1);

  auto two = th::disjoint_union(th::cycle(5), th::cycle(4));
  auto comps = connected_components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 5);
  CHECK(comps[1].size() == 4);
  CHECK(comps[0][0] == 0);  // ordered by smallest vertex

  auto cube = reference_cube();
  std::vector<int> rest;
  for (int v = 1; v < 8; ++v) rest.push_back(v);
  auto sub = induced_subgraph(cube, rest);
  auto cc = connected_components(sub.graph);
  REQUIRE(cc.size() == 1);
  CHECK(cc[0].size() == 7);
}

TEST_CASE("shortest path within, lexicographic ties") {
  auto c6 = th::cycle(6);
  std::vector<int> all{0, 1, 2, 3, 4, 5};
  auto p = shortest_path_within(c6, 0, 3, all);
  REQUIRE(p.has_value());
  CHECK(*p == InducedPath{0, 1, 2, 3});

  // rim plus a center adjacent to 0, 2, 4
  auto w = th::wheel(6, {0, 2, 4});
  auto q = shortest_path_within(w, 0, 2, std::vector<int>{1, 3, 4, 5}, 6);
  REQUIRE(q.has_value());
  CHECK(*q == InducedPath{0, 1, 2});

  auto r = shortest_path_within(w, 0, 4, std::vector<int>{5}, 6);
  REQUIRE(r.has_value());
  CHECK(*r == InducedPath{0, 5, 4});

  auto none = shortest_path_within(w, 0, 4, std::vector<int>{1, 2, 3}, 6);
  CHECK(!none.has_value());
}

TEST_CASE("shortest paths are induced paths") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 5 + static_cast<int>(rng() % 8);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 30) edges.emplace_back(u, v);
    auto g = Graph::from_edges(n, edges);
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a == b) continue;
    std::vector<int> allowed;
    for (int v = 0; v < n; ++v)
      if (v != a && v != b && rng() % 100 < 80) allowed.push_back(v);
    auto p = shortest_path_within(g, a, b, allowed);
    if (p) CHECK(is_induced_path(g, *p));
  }
}

TEST_CASE("components commute with restriction") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 6 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 25) edges.emplace_back(u, v);
    auto g = Graph::from_edges(n, edges);
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) s.push_back(v);
    auto sub = induced_subgraph(g, s);
    auto big = connected_components(g);
    for (const auto& small : connected_components(sub.graph)) {
      // each component of g[s] sits inside a single component of g
      std::vector<int> orig;
      for (int v : small) orig.push_back(sub.orig_ids[v]);
      int host = -1;
      for (size_t i = 0; i < big.size(); ++i)
        for (int v : orig)
          if (std::binary_search(big[i].begin(), big[i].end(), v)) {
            if (host < 0) host = static_cast<int>(i);
            CHECK(host == static_cast<int>(i));
          }
    }
  }
}

TEST_CASE("cycle canonicalization and isomorphism") {
  Hole h{3, 1, 0, 2};
  auto c = canonical_cycle(h);
  CHECK(c[0] == 0);
  CHECK(c == canonical_cycle(Hole{0, 2, 3, 1}));

  CHECK(isomorphic(th::cycle(6), th::cycle(6)));
  CHECK(!isomorphic(th::cycle(6), th::path_graph(6)));
  CHECK(isomorphic(reference_cube(), reference_cube()));
}
