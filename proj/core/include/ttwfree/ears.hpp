#pragma once

#include <vector>

#include "ttwfree/graph.hpp"

namespace ttw {

// A maximal attachment path: x..y with x, y of degree 2, their outside
// neighbors a != b sharing a common neighbor c, interior vertices of degree 2
// or of degree 3 and adjacent to c, and at least one interior neighbor of c.
struct Ear {
  InducedPath path;  // x .. y
  int a;             // outside neighbor of path.front()
  int b;             // outside neighbor of path.back()
  int c;             // the common neighbor the interior attaches to

  bool operator==(const Ear& o) const {
    return path == o.path && a == o.a && b == o.b && c == o.c;
  }
};

// All maximal ears, in a deterministic order (canonical path orientation,
// sorted by vertex sequence). Pairwise disjoint whenever the host is atomic
// and not a wheel.
std::vector<Ear> find_ears(const Graph& g);

// Checks every clause of the ear definition except maximality.
bool is_ear_shape(const Graph& g, const Ear& e);

}  // namespace ttw
