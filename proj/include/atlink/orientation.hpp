#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atlink/graph.hpp"

namespace atlink {

// Admissible local patterns for an edge orientation of an almost-large-type
// graph.  A cycle is traversed with a start point and a sense; each slot
// constrains one edge: whether it must carry a label above 2, and whether it
// must be crossed along its arrow (+1), against it (-1), or either way (0).
//
//   directed-triangle   (+1 big)(+1 big)(+1 big)
//   opposite-pair       (+1 big)( 0 any)(-1 big)( 0 any)
//   adjacent-pair       (+1 big)(+1 big)( 0 any)( 0 any)
//
// A cycle matches if some rotation, in the forward sense or (by default) the
// reversed sense, satisfies a pattern; with reflections disabled only the
// canonical traversal sense is tried, which is strictly more demanding.
struct OrientationOptions {
  bool allow_reflections = true;
};

struct CycleCheck {
  std::vector<int> vertices;
  bool ok = false;
  std::string pattern;  // matched pattern name, empty if none
  std::string reason;   // failure description, empty if ok
};

struct OrientationReport {
  bool valid = false;
  std::vector<CycleCheck> cycles;
};

// Checks every 3-cycle and 4-cycle of the base graph against the pattern
// table.  Pre: the base graph is of almost large type.
OrientationReport validate_orientation(const DirectedLabeledGraph& dg,
                                       const OrientationOptions& options = {});

// Orients a cone: the apex must be adjacent to every other vertex, the rest
// must induce a square-free bipartite graph whose non-isolated part carries
// only labels above 2 (also on its edges to the apex).  Edges from the apex
// to isolated vertices run canonically; elsewhere white -> black, apex ->
// white, black -> apex, for the computed 2-coloring.  Throws
// PreconditionError naming the failed requirement.
DirectedLabeledGraph orient_cone(const LabeledGraph& g, int apex);

// Orients a square-free almost-large graph: 3-cycles (necessarily pairwise
// edge-disjoint) become directed cycles, every other edge runs canonically.
DirectedLabeledGraph orient_square_free(const LabeledGraph& g);

// Exhaustive backtracking over edge directions in canonical order, forward
// tried before backward; first valid orientation, or empty if none exists.
// Pre: almost large type.
std::optional<DirectedLabeledGraph> orient_search(const LabeledGraph& g,
                                                  const OrientationOptions& options = {});

// The construction ladder used by classification: each cone apex candidate,
// then the square-free rule, then the search.  `method` names the rule that
// produced the orientation ("cone", "square_free", "search").
struct OrientationResult {
  DirectedLabeledGraph dg;
  std::string method;
};

std::optional<OrientationResult> try_orient(const LabeledGraph& g);

}  // namespace atlink
