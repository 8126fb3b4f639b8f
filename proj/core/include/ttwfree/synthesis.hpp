#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ttwfree/basic.hpp"
#include "ttwfree/graph.hpp"
#include "ttwfree/patterns.hpp"

namespace ttw {

enum class Subclass { EvenWheelFree, EvenHoleFree, Bipartite };

// ---------------------------------------------------------------- gluing

struct CliqueGluePart {
  Graph graph;
  std::vector<int> clique;  // identified position-wise across parts, size <= 2
};

struct CliqueGlue {
  std::vector<CliqueGluePart> parts;  // >= 2 parts, equal clique sizes
};

struct TwoSepGluePart {
  Graph graph;
  int a, b;
  InducedPath marker;  // a..b, length >= 2, interior of degree 2
};

struct TwoSepGlue {
  TwoSepGluePart x, y;
};

struct P3GluePart {
  Graph graph;
  int a, c, b;         // induced path a-c-b
  InducedPath marker;  // a..b, length >= 2, not through c
};

// x's marker carries >= 1 interior neighbor of c (interiors of degree 2, or 3
// and adjacent to c) and x additionally holds an a..b path avoiding c and
// N(c); y's marker avoids N(c) internally with degree-2 interiors, and y
// admits no other a..b path avoiding N(c) internally.
struct P3Glue {
  P3GluePart x, y;
};

using GluingRecipe = std::variant<CliqueGlue, TwoSepGlue, P3Glue>;

struct GlueResult {
  Graph graph;
  // per part: part-local id -> glued id, -1 for deleted marker interiors
  std::vector<std::vector<int>> part_ids;
};

// Applies the identification-and-deletion recipe. Throws
// std::invalid_argument naming the violated clause.
GlueResult glue(const GluingRecipe& recipe);

std::string recipe_to_text(const GluingRecipe& recipe);
GluingRecipe recipe_from_text(const std::string& text);

// ---------------------------------------------------------------- members

// Deterministic per seed; grows a member by clique / 2-separator /
// P3-separator gluings over basic parts, parity-safe under a subclass
// constraint, and post-verifies the result. Throws std::invalid_argument for
// target_size < 1.
Graph random_member(std::uint64_t seed, int target_size,
                    std::optional<Subclass> subclass = std::nullopt);

struct GenStats {
  int clique_glues = 0;
  int two_glues = 0;
  int p3_glues = 0;
};

Graph random_member(std::uint64_t seed, int target_size,
                    std::optional<Subclass> subclass, GenStats& stats);

// ---------------------------------------------------------------- good P3

enum class GoodP3Strategy { Enumeration, Characterization };

// Enumeration checks every induced a..b path of g-c for an interior neighbor
// of c (exhaustive, size-guarded). Characterization assumes g atomic and
// (theta, triangle)-free and tests the hole/wheel conditions instead.
bool is_good_p3(const Graph& g, int a, int c, int b, GoodP3Strategy strategy,
                const OracleLimits& limits = {});

// ---------------------------------------------------------------- ears

struct EarProfile {
  int a, c, b;              // anchor, a good P3 of the host
  int length;               // vertex count of the new path, >= 3
  std::vector<int> attach;  // interior indices (0-based) adjacent to c
};

// Adds the path with edges a-p0, chain, p(last)-b and c-p(i) for the attach
// set; new vertices take ids n..n+length-1. Validates the anchor with the
// given strategy and the no-two-consecutive-attachments rule.
Graph add_good_ear(const Graph& g, const EarProfile& step,
                   GoodP3Strategy strategy = GoodP3Strategy::Enumeration,
                   const OracleLimits& limits = {});

struct EarStepConcrete {
  int a, c, b;
  InducedPath path;  // ids of the host graph
};

struct EarSequence {
  Hole base;                           // ids of the original graph
  std::vector<EarStepConcrete> steps;  // replay order
};

// Peels removable ears until a hole remains; replaying the steps over the
// base rebuilds the input graph. Requires an atomic accepted input on >= 3
// vertices other than the cube.
EarSequence ear_sequence(const Graph& g, const OracleLimits& limits = {});

// Rebuilds the graph from its ear sequence; each prefix is the induced
// subgraph of the original on the vertices seen so far.
Graph replay_ear_sequence(const Graph& original, const EarSequence& seq);

std::string ear_sequence_to_text(const EarSequence& seq);
EarSequence ear_sequence_from_text(const std::string& text);

// ---------------------------------------------------------------- gadget

struct GoodP3Gadget {
  Graph graph;  // g plus the edge c-cprime
  int a, b;     // the two neighbors of c in g
};

// c and cprime must be non-adjacent vertices of degree 2; the output graph
// has a hole through c and cprime in g iff a-c-b is not good in the output.
GoodP3Gadget goodp3_gadget(const Graph& g, int c, int cprime);

}  // namespace ttw
