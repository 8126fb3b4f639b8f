#pragma once

#include <optional>
#include <vector>

#include "ttwfree/graph.hpp"

namespace ttw {

enum class SeparatorKind { Clique, Two, P3 };

// A separator together with its split and witness paths. For Two and P3,
// side_x/side_y are the two components; witness_x is an a..b path with its
// interior in side_x (for P3 additionally avoiding N(c) internally, side_x
// being the loose side), witness_y likewise through side_y. The block that
// keeps one side carries the witness path of the opposite side as its marker.
struct SeparatorSplit {
  SeparatorKind kind;
  std::vector<int> clique;  // Clique only; may be empty
  int a = -1, b = -1, c = -1;  // Two: {a, b}; P3: the path a-c-b
  std::vector<int> side_x, side_y;
  InducedPath witness_x, witness_y;
};

enum class Looseness { Loose, Tight };

// Minimum-cardinality clique separator (sizes 0, 1, 2 probed in order, then
// triangles for safety), lexicographically smallest. Absent iff g is atomic.
std::optional<SeparatorSplit> find_clique_separator(const Graph& g);

// Proper 2-separator: exactly two components, both sides carry an a..b path
// and neither side induces a bare a..b path. Caller guarantees g atomic.
std::optional<SeparatorSplit> find_proper_2_separator(const Graph& g);

// Proper P3-separator: induced path a-c-b, exactly two components, c with
// neighbors on both sides, one side loose and one tight, no bare-path side.
// Caller guarantees g superatomic.
std::optional<SeparatorSplit> find_proper_p3_separator(const Graph& g);

// Whether an a..b path through comp survives deleting N(c) from comp.
// Throws std::invalid_argument when comp carries no a..b path at all.
Looseness looseness(const Graph& g, int a, int c, int b,
                    std::span<const int> comp);

struct Block {
  Graph graph;
  std::vector<int> parent_ids;  // block id -> parent id
};

// Blocks of decomposition: induced subgraphs made of one side, the separator
// and the opposite side's witness path. Throws on an invalid split.
std::vector<Block> make_blocks(const Graph& g, const SeparatorSplit& s);

}  // namespace ttw
