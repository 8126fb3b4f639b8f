#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ttwfree/graph.hpp"

namespace ttw {

// Thrown when an exhaustive search is requested above its size limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PatternKind {
  Triangle,
  Theta,
  Hole,
  EvenHole,
  OddHole,
  Wheel,
  EvenWheel,
  Wac,
  Turtle,
  CWac,
  Prism,
  Cube,
};

const char* pattern_name(PatternKind k);
std::optional<PatternKind> pattern_from_name(const std::string& name);

struct PatternWitness {
  PatternKind kind;
  std::vector<int> vertices;  // sorted union of all role vertices

  Hole cycle;                      // rim / hole, canonical cyclic order
  std::vector<int> centers;       // wheel: {c}; wac family: {c, c'} sorted
  std::array<int, 2> apexes{-1, -1};      // theta
  std::vector<InducedPath> paths;          // theta / prism connector paths
  std::vector<std::vector<int>> groups;    // prism triangles, cube bipartition
};

struct OracleLimits {
  int pattern = 16;      // exhaustive pattern kinds
  int kuratowski = 14;   // subdivision search
};

// Exhaustive detector. Triangle, Hole and Cube run at any size; the other
// kinds enumerate and are guarded by limits.pattern.
std::optional<PatternWitness> find_pattern(const Graph& g, PatternKind kind,
                                           const OracleLimits& limits = {});

// True iff the witness matches its kind's definition exactly, including the
// "no other edges" clauses.
bool verify_witness(const Graph& g, const PatternWitness& w);

// A hole containing both a and b, or absent. Guarded by limits.pattern.
std::optional<Hole> hole_through(const Graph& g, int a, int b,
                                 const OracleLimits& limits = {});

struct BipartiteResult {
  bool bipartite;
  std::vector<int> coloring;    // when bipartite: 0/1 per vertex
  std::vector<int> odd_walk;    // when not: odd closed walk
};

BipartiteResult is_bipartite(const Graph& g);

enum class KuratowskiTarget { K5, K33 };

struct KuratowskiWitness {
  KuratowskiTarget target;
  std::vector<int> branch_vertices;      // 5, or 6 as two sides of 3
  std::vector<std::vector<int>> paths;   // one per target edge, with ends
};

// Exhaustive subdivision search; witness present iff g is non-planar.
// Guarded by limits.kuratowski.
std::optional<KuratowskiWitness> kuratowski_witness(const Graph& g,
                                                    const OracleLimits& limits = {});

// Enumerates every hole in a canonical deterministic order. The callback
// returns false to stop; the function reports whether it was stopped.
bool enumerate_holes(const Graph& g, const std::function<bool(const Hole&)>& cb);

// Positions of N_H(v) along the cyclic order of h (indices into h).
std::vector<int> neighbor_positions(const Graph& g, const Hole& h, int v);

// Whether some sector of the wheel (h, y) contains every neighbor of x on h.
bool neighbors_confined_to_sector(const Graph& g, const Hole& h, int x, int y);

}  // namespace ttw
