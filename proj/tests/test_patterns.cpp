#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ttwfree/patterns.hpp"

using namespace ttw;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, int edge_percent) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < edge_percent) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// C6 rim, centers 6 and 7 on alternating spokes, joined by an edge
Graph cwac_example() {
  return Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                               {6, 0}, {6, 2}, {6, 4},
                               {7, 1}, {7, 3}, {7, 5},
                               {6, 7}});
}

}  // namespace

TEST_CASE("theta detection on K23") {
  auto g = th::complete_bipartite(2, 3);
  auto w = find_pattern(g, PatternKind::Theta);
  REQUIRE(w.has_value());
  CHECK(verify_witness(g, *w));
  CHECK(w->vertices.size() == 5);
  // apexes are the size-2 side
  CHECK(w->apexes[0] == 0);
  CHECK(w->apexes[1] == 1);
  CHECK(w->paths.size() == 3);
}

TEST_CASE("c-wac example finds c-wac and no triangle") {
  auto g = cwac_example();
  auto w = find_pattern(g, PatternKind::CWac);
  REQUIRE(w.has_value());
  CHECK(verify_witness(g, *w));
  CHECK(!find_pattern(g, PatternKind::Triangle));
  CHECK(find_pattern(g, PatternKind::Wac));
  CHECK(!find_pattern(g, PatternKind::Turtle));
}

TEST_CASE("cube pattern in the cube, no theta") {
  auto g = reference_cube();
  auto w = find_pattern(g, PatternKind::Cube);
  REQUIRE(w.has_value());
  CHECK(verify_witness(g, *w));
  CHECK(w->vertices.size() == 8);
  CHECK(!find_pattern(g, PatternKind::Theta));
}

TEST_CASE("wheel parities") {
  auto g = th::wheel(6, {0, 2, 4});
  CHECK(!find_pattern(g, PatternKind::EvenWheel));  // three spokes
  CHECK(find_pattern(g, PatternKind::Wheel));
  auto eh = find_pattern(g, PatternKind::EvenHole);
  REQUIRE(eh.has_value());  // the rim
  CHECK(eh->cycle.size() % 2 == 0);

  auto g4 = th::wheel(8, {0, 2, 4, 6});
  CHECK(find_pattern(g4, PatternKind::EvenWheel));
}

TEST_CASE("turtle vs c-wac orientation") {
  // rim C7; center a sees 0,2,4; center b sees 0,1,2 confined to one sector of a
  auto g = Graph::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0},
                                 {7, 0}, {7, 2}, {7, 4},
                                 {8, 0}, {8, 1}, {8, 2},
                                 {7, 8}});
  CHECK(find_pattern(g, PatternKind::Wac));
  CHECK(find_pattern(g, PatternKind::Turtle));
}

TEST_CASE("witness role violations are rejected") {
  auto g = th::wheel(6, {0, 2, 4});
  auto w = find_pattern(g, PatternKind::Wheel);
  REQUIRE(w.has_value());
  auto broken = *w;
  broken.centers = {broken.cycle[0]};  // center listed as rim vertex
  CHECK(!verify_witness(g, broken));

  auto cube = reference_cube();
  auto cw = find_pattern(cube, PatternKind::Cube);
  REQUIRE(cw.has_value());
  auto short_cube = *cw;
  short_cube.vertices.pop_back();
  CHECK(!verify_witness(cube, short_cube));
}

TEST_CASE("hole detection is polynomial-path and correct") {
  CHECK(find_pattern(th::complete(4), PatternKind::Hole) == std::nullopt);
  CHECK(find_pattern(th::cycle(4), PatternKind::Hole).has_value());
  auto tree = th::path_graph(7);
  CHECK(!find_pattern(tree, PatternKind::Hole));
  auto w = find_pattern(th::petersen(), PatternKind::Hole);
  REQUIRE(w.has_value());
  CHECK(verify_witness(th::petersen(), *w));
}

TEST_CASE("prism detection") {
  // two triangles joined by three disjoint paths of lengths 1, 1, 2
  auto g = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2},
                                 {3, 4}, {4, 5}, {3, 5},
                                 {0, 3}, {1, 4}, {2, 6}, {6, 5}});
  auto w = find_pattern(g, PatternKind::Prism);
  REQUIRE(w.has_value());
  CHECK(verify_witness(g, *w));
  CHECK(!find_pattern(th::complete(4), PatternKind::Prism));
  CHECK(th::subset_oracle_has(g, PatternKind::Prism));
}

TEST_CASE("hole through two vertices") {
  auto c5 = th::cycle(5);
  auto h = hole_through(c5, 0, 2);
  REQUIRE(h.has_value());
  CHECK(h->size() == 5);

  // two C4s sharing one vertex: no hole crosses the cutvertex pair
  auto g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                 {0, 4}, {4, 5}, {5, 6}, {6, 0}});
  CHECK(!hole_through(g, 1, 5).has_value());

  auto k23 = th::complete_bipartite(2, 3);
  auto h2 = hole_through(k23, 0, 1);
  REQUIRE(h2.has_value());
  CHECK(h2->size() == 4);
}

TEST_CASE("bipartiteness with certificates") {
  auto r = is_bipartite(th::cycle(6));
  CHECK(r.bipartite);
  for (auto [u, v] : th::cycle(6).edges()) CHECK(r.coloring[u] != r.coloring[v]);

  auto o = is_bipartite(th::cycle(5));
  CHECK(!o.bipartite);
  REQUIRE(o.odd_walk.size() % 2 == 1);
  auto& wk = o.odd_walk;
  for (size_t i = 0; i + 1 < wk.size(); ++i)
    CHECK(th::cycle(5).adjacent(wk[i], wk[i + 1]));
  CHECK(th::cycle(5).adjacent(wk.front(), wk.back()));

  CHECK(is_bipartite(reference_cube()).bipartite);
}

TEST_CASE("kuratowski witnesses") {
  CHECK(!kuratowski_witness(reference_cube()).has_value());
  auto k5 = th::complete(5);
  auto w = kuratowski_witness(k5);
  REQUIRE(w.has_value());
  CHECK(w->target == KuratowskiTarget::K5);
  CHECK(w->paths.size() == 10);

  auto k33 = th::complete_bipartite(3, 3);
  auto w2 = kuratowski_witness(k33);
  REQUIRE(w2.has_value());
  CHECK(w2->target == KuratowskiTarget::K33);

  CHECK(kuratowski_witness(th::petersen()).has_value());
  CHECK(!kuratowski_witness(th::cycle(8)).has_value());
  CHECK(!kuratowski_witness(th::wheel(8, {0, 2, 4, 6})).has_value());

  // full odd daisy, searched with a raised limit
  auto fd = th::full_daisy(5);
  OracleLimits lim;
  lim.kuratowski = fd.n();
  CHECK(kuratowski_witness(fd, lim).has_value());
}

TEST_CASE("size limits are hard errors") {
  std::mt19937_64 rng(3);
  auto g = random_graph(rng, 18, 20);
  CHECK_THROWS_AS(find_pattern(g, PatternKind::Theta), SizeLimitError);
  CHECK_THROWS_AS(find_pattern(g, PatternKind::Wac), SizeLimitError);
  CHECK_THROWS_AS(hole_through(g, 0, 1), SizeLimitError);
  CHECK_THROWS_AS(kuratowski_witness(g), SizeLimitError);
  CHECK_NOTHROW(find_pattern(g, PatternKind::Triangle));
  CHECK_NOTHROW(find_pattern(g, PatternKind::Hole));
  CHECK_NOTHROW(find_pattern(g, PatternKind::Cube));
}

TEST_CASE("detector agrees with the subset oracle at desk scale") {
  std::mt19937_64 rng(42);
  const PatternKind kinds[] = {
      PatternKind::Triangle, PatternKind::Theta,    PatternKind::Hole,
      PatternKind::EvenHole, PatternKind::OddHole,  PatternKind::Wheel,
      PatternKind::EvenWheel, PatternKind::Wac,     PatternKind::Turtle,
      PatternKind::CWac,     PatternKind::Prism,    PatternKind::Cube};
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng() % 7);  // up to 10
    auto g = random_graph(rng, n, 18 + static_cast<int>(rng() % 35));
    for (auto kind : kinds) {
      auto found = find_pattern(g, kind);
      bool oracle = th::subset_oracle_has(g, kind);
      INFO("kind=", pattern_name(kind), " graph=", to_string(g));
      CHECK(found.has_value() == oracle);
      if (found) CHECK(verify_witness(g, *found));
    }
  }
}

TEST_CASE("triangle-free wacs contain an even wheel or a theta") {
  // rim C_k plus two adjacent centers with disjoint non-consecutive spoke sets
  std::mt19937_64 rng(17);
  int seen = 0;
  for (int trial = 0; trial < 200 && seen < 25; ++trial) {
    int k = 6 + static_cast<int>(rng() % 5);
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> s1, s2;
    std::vector<char> taken(k, 0);
    auto usable = [&](int p, const std::vector<int>& own) {
      if (taken[p]) return false;
      for (int q : own)
        if ((p - q + k) % k == 1 || (q - p + k) % k == 1) return false;
      return true;
    };
    for (int p : order)
      if (s1.size() < 3 && usable(p, s1)) {
        s1.push_back(p);
        taken[p] = 1;
      }
    for (int p : order)
      if (s2.size() < 3 && usable(p, s2)) {
        s2.push_back(p);
        taken[p] = 1;
      }
    if (s1.size() < 3 || s2.size() < 3) continue;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    for (int p : s1) e.emplace_back(k, p);
    for (int p : s2) e.emplace_back(k + 1, p);
    e.emplace_back(k, k + 1);
    auto g = Graph::from_edges(k + 2, e);
    if (find_pattern(g, PatternKind::Triangle)) continue;
    if (!find_pattern(g, PatternKind::Wac)) continue;
    ++seen;
    bool ew = find_pattern(g, PatternKind::EvenWheel).has_value();
    bool th_ = find_pattern(g, PatternKind::Theta).has_value();
    CHECK((ew || th_));
  }
  CHECK(seen >= 10);
  auto g = cwac_example();
  CHECK((find_pattern(g, PatternKind::EvenWheel) || find_pattern(g, PatternKind::Theta)));
}

TEST_CASE("no outside vertex has exactly two neighbors on a hole") {
  std::mt19937_64 rng(23);
  int considered = 0;
  for (int trial = 0; trial < 300 && considered < 20; ++trial) {
    auto g = random_graph(rng, 7 + static_cast<int>(rng() % 4), 25);
    if (find_pattern(g, PatternKind::Triangle) || find_pattern(g, PatternKind::Theta))
      continue;
    ++considered;
    enumerate_holes(g, [&](const Hole& h) {
      std::vector<char> in(g.n(), 0);
      for (int v : h) in[v] = 1;
      for (int v = 0; v < g.n(); ++v)
        if (!in[v]) CHECK(neighbor_positions(g, h, v).size() != 2);
      return true;
    });
  }
  CHECK(considered > 0);
}
