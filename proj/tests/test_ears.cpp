#include "doctest.h"
#include "helpers.hpp"
#include "ttwfree/ears.hpp"

using namespace ttw;

TEST_CASE("holes have no ears") {
  CHECK(find_ears(th::cycle(7)).empty());
  CHECK(find_ears(th::cycle(4)).empty());
}

TEST_CASE("cube has no ears") { CHECK(find_ears(reference_cube()).empty()); }

TEST_CASE("wheel ears overlap but are enumerated") {
  auto w = th::wheel(6, {0, 2, 4});
  auto ears = find_ears(w);
  CHECK(!ears.empty());
  for (const auto& e : ears) CHECK(is_ear_shape(w, e));
  // sector-swap ears: interior spoke between two degree-2 rim vertices
  bool found_135 = false;
  for (const auto& e : ears)
    if (e.path == InducedPath{1, 2, 3}) found_135 = true;
  CHECK(found_135);
}

TEST_CASE("daisy petals are exactly the ears") {
  DaisyDescriptor d;
  auto g = th::nonfull_daisy_6_2(&d);
  auto ears = find_ears(g);
  REQUIRE(ears.size() == 2);
  for (const auto& e : ears) {
    CHECK(is_ear_shape(g, e));
    bool matches = false;
    for (const auto& petal : d.petals) {
      auto p = petal.path;
      if (p == e.path) matches = true;
      std::reverse(p.begin(), p.end());
      if (p == e.path) matches = true;
    }
    CHECK(matches);
    // the ear's common neighbor is the petal's center
    CHECK((e.c == 0 || e.c == 1));
  }
  // disjointness off the wheel case
  std::vector<char> seen(g.n(), 0);
  for (const auto& e : ears)
    for (int v : e.path) {
      CHECK(!seen[v]);
      seen[v] = 1;
    }
}

TEST_CASE("full daisy ears") {
  auto g = th::full_daisy(5);
  auto ears = find_ears(g);
  CHECK(ears.size() == 5);
}

TEST_CASE("longer petals with several attachments") {
  // one petal of five vertices, attachments at interior positions 1 and 3
  auto g = Graph::from_edges(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                  {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 1},
                                  {0, 7}, {0, 9}});
  auto ears = find_ears(g);
  REQUIRE(ears.size() == 1);
  CHECK(ears[0].path == InducedPath{6, 7, 8, 9, 10});
  CHECK(ears[0].c == 0);
  CHECK(ears[0].a == 5);
  CHECK(ears[0].b == 1);
}
