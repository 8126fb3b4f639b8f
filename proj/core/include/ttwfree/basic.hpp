#pragma once

#include <optional>
#include <vector>

#include "ttwfree/graph.hpp"

namespace ttw {

// A petal hangs off the base hole at three consecutive hole vertices: its
// front end attaches to the predecessor of the center, its back end to the
// successor, and the center sees at least one interior vertex.
struct Petal {
  int center_index;   // index into the base hole
  InducedPath path;   // x .. y, disjoint from the hole
};

struct DaisyDescriptor {
  Hole base_hole;
  std::vector<Petal> petals;  // sorted by center_index, distinct centers
};

enum class BasicType { K1, K2, Cube, Daisy };

struct BasicKind {
  BasicType type;
  std::optional<DaisyDescriptor> daisy;  // present iff type == Daisy
};

struct DaisyClass {
  int k = 0;         // base hole length
  bool full = false;
  bool hole_odd = false;
  std::vector<int> petal_center_neighbor_counts;
  std::vector<std::vector<int>> external_sector_lengths;  // per petal
  bool even_wheel_free = false;
  bool even_hole_free = false;
  bool bipartite = false;
};

// Whole-graph recognition of K1, K2, the cube and daisies (holes and wheels
// included as daisies with 0 or 1 petal). Every acceptance is certified by
// verify_daisy, so false positives are impossible.
std::optional<BasicKind> recognize_basic(const Graph& g);

// True iff the descriptor satisfies every daisy clause and covers g exactly.
bool verify_daisy(const Graph& g, const DaisyDescriptor& d);

DaisyClass classify_daisy(const Graph& g, const DaisyDescriptor& d);

// The 3-dimensional hypercube on ids 0..7 (side {0..3} against {4..7}).
Graph reference_cube();

}  // namespace ttw
