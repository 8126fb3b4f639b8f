#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ttwfree/basic.hpp"
#include "ttwfree/patterns.hpp"
#include "ttwfree/separators.hpp"

using namespace ttw;

TEST_CASE("tiny graphs") {
  auto k1 = Graph::from_edges(1, {});
  auto r1 = recognize_basic(k1);
  REQUIRE(r1.has_value());
  CHECK(r1->type == BasicType::K1);

  auto k2 = Graph::from_edges(2, {{0, 1}});
  REQUIRE(recognize_basic(k2).has_value());
  CHECK(recognize_basic(k2)->type == BasicType::K2);

  auto e2 = Graph::from_edges(2, {});
  CHECK(!recognize_basic(e2).has_value());
  CHECK(!recognize_basic(th::path_graph(3)).has_value());
  CHECK(!recognize_basic(th::complete(3)).has_value());
}

TEST_CASE("holes are petal-free daisies") {
  auto r = recognize_basic(th::cycle(7));
  REQUIRE(r.has_value());
  CHECK(r->type == BasicType::Daisy);
  CHECK(r->daisy->petals.empty());
  CHECK(r->daisy->base_hole.size() == 7);
}

TEST_CASE("wheels are one-petal daisies with a canonical descriptor") {
  auto w = th::wheel(6, {0, 2, 4});
  auto r = recognize_basic(w);
  REQUIRE(r.has_value());
  CHECK(r->type == BasicType::Daisy);
  REQUIRE(r->daisy->petals.size() == 1);
  CHECK(verify_daisy(w, *r->daisy));
  // deterministic: recognizing twice yields the same descriptor
  auto r2 = recognize_basic(w);
  CHECK(r->daisy->base_hole == r2->daisy->base_hole);
  CHECK(r->daisy->petals[0].path == r2->daisy->petals[0].path);
}

TEST_CASE("cube") {
  auto r = recognize_basic(reference_cube());
  REQUIRE(r.has_value());
  CHECK(r->type == BasicType::Cube);
}

TEST_CASE("theta is not basic") {
  CHECK(!recognize_basic(th::complete_bipartite(2, 3)).has_value());
  CHECK(!recognize_basic(th::petersen()).has_value());
  CHECK(!recognize_basic(th::double_pentagon()).has_value());
}

TEST_CASE("multi-petal daisies round-trip through recognition") {
  DaisyDescriptor d;
  auto g = th::nonfull_daisy_6_2(&d);
  CHECK(verify_daisy(g, d));
  auto r = recognize_basic(g);
  REQUIRE(r.has_value());
  CHECK(r->type == BasicType::Daisy);
  CHECK(r->daisy->petals.size() == 2);
  CHECK(verify_daisy(g, *r->daisy));

  DaisyDescriptor fd;
  auto f5 = th::full_daisy(5, &fd);
  CHECK(verify_daisy(f5, fd));
  auto rf = recognize_basic(f5);
  REQUIRE(rf.has_value());
  CHECK(rf->daisy->petals.size() == 5);
}

TEST_CASE("verify_daisy rejects structural violations") {
  DaisyDescriptor d;
  auto g = th::nonfull_daisy_6_2(&d);

  auto no_petals = d;
  no_petals.petals.clear();
  CHECK(!verify_daisy(g, no_petals));  // vertices uncovered

  auto wrong_center = d;
  wrong_center.petals[0].center_index = 3;
  CHECK(!verify_daisy(g, wrong_center));

  // centers must form a consecutive stretch
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 6; ++i) e.emplace_back(i, (i + 1) % 6);
  int next = 6;
  DaisyDescriptor gap;
  gap.base_hole = {0, 1, 2, 3, 4, 5};
  for (int ci : {0, 3}) {
    int x = next, m = next + 1, y = next + 2;
    next += 3;
    e.emplace_back((ci + 5) % 6, x);
    e.emplace_back(x, m);
    e.emplace_back(m, y);
    e.emplace_back(y, (ci + 1) % 6);
    e.emplace_back(ci, m);
    gap.petals.push_back({ci, {x, m, y}});
  }
  auto gg = Graph::from_edges(next, e);
  CHECK(!verify_daisy(gg, gap));
  CHECK(!recognize_basic(gg).has_value());
}

TEST_CASE("daisy classification per subclass criteria") {
  // a hole
  auto c6 = th::cycle(6);
  auto r6 = recognize_basic(c6);
  auto cls6 = classify_daisy(c6, *r6->daisy);
  CHECK(cls6.bipartite);
  CHECK(!cls6.even_hole_free);
  CHECK(cls6.even_wheel_free);

  // three-spoke wheel: even-wheel-free, not even-hole-free (even rim)
  auto w = th::wheel(6, {0, 2, 4});
  auto rw = recognize_basic(w);
  auto clsw = classify_daisy(w, *rw->daisy);
  CHECK(clsw.even_wheel_free);
  CHECK(!clsw.even_hole_free);

  // wheel C7 with sectors 3,2,2: odd spokes but a sector of even length
  auto w7 = th::wheel(7, {0, 3, 5});
  auto rw7 = recognize_basic(w7);
  auto cls7 = classify_daisy(w7, *rw7->daisy);
  CHECK(cls7.even_wheel_free);
  CHECK(!cls7.even_hole_free);

  // wheel C9 with sectors 3,3,3: all odd, odd rim -> even-hole-free
  auto w9 = th::wheel(9, {0, 3, 6});
  auto rw9 = recognize_basic(w9);
  auto cls9 = classify_daisy(w9, *rw9->daisy);
  CHECK(cls9.even_wheel_free);
  CHECK(cls9.even_hole_free);
  CHECK(!cls9.bipartite);

  // wheel C8 with sectors 2,2,2,2: bipartite
  auto w8 = th::wheel(8, {0, 2, 4, 6});
  auto rw8 = recognize_basic(w8);
  auto cls8 = classify_daisy(w8, *rw8->daisy);
  CHECK(cls8.bipartite);
  CHECK(!cls8.even_wheel_free);  // four spokes
}

TEST_CASE("classification flags agree with the pattern oracles") {
  std::vector<Graph> daisies = {th::cycle(5),  th::cycle(6),
                                th::wheel(6, {0, 2, 4}), th::wheel(9, {0, 3, 6}),
                                th::wheel(8, {0, 2, 4, 6})};
  DaisyDescriptor d;
  daisies.push_back(th::nonfull_daisy_6_2(&d));
  for (const auto& g : daisies) {
    if (g.n() > 16) continue;
    auto r = recognize_basic(g);
    REQUIRE(r.has_value());
    REQUIRE(r->type == BasicType::Daisy);
    auto cls = classify_daisy(g, *r->daisy);
    CHECK(cls.even_wheel_free == !th::subset_oracle_has(g, PatternKind::EvenWheel));
    CHECK(cls.even_hole_free == !th::subset_oracle_has(g, PatternKind::EvenHole));
    CHECK(cls.bipartite == is_bipartite(g).bipartite);
  }
}

TEST_CASE("daisies carry no forbidden pattern and no separator") {
  DaisyDescriptor d;
  std::vector<Graph> daisies = {th::cycle(5), th::wheel(6, {0, 2, 4}),
                                th::nonfull_daisy_6_2(&d), th::full_daisy(4)};
  for (const auto& g : daisies) {
    if (g.n() <= 16) {
      CHECK(!find_pattern(g, PatternKind::Theta));
      CHECK(!find_pattern(g, PatternKind::Triangle));
      CHECK(!find_pattern(g, PatternKind::Wac));
    }
    CHECK(!find_clique_separator(g));
    CHECK(!find_proper_2_separator(g));
    CHECK(!find_proper_p3_separator(g));
  }
  auto f5 = th::full_daisy(5);
  CHECK(!find_clique_separator(f5));
  CHECK(!find_proper_2_separator(f5));
  CHECK(!find_proper_p3_separator(f5));
}
