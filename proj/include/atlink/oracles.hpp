#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "atlink/link.hpp"
#include "atlink/orientation.hpp"

namespace atlink::oracle {

// Slow reference implementations used to cross-check the main code paths.
// They deliberately share no algorithmic machinery with them: distances come
// from Floyd-Warshall instead of Dijkstra, the systole from cycle
// enumeration instead of edge removal, orientation existence from
// exhaustive enumeration instead of backtracking.

// All-pairs vertex distances; empty entries are unreachable pairs.
std::vector<std::vector<std::optional<int>>> floyd_warshall_all_pairs(
    const LinkGraph& link);

// Shortest cycle by enumerating vertex-simple cycles and parallel-edge
// pairs.  Guard: at most 24 link vertices.
std::optional<int> brute_systole(const LinkGraph& link);

// Tries all 2^E orientations against validate_orientation.  Guard: at most
// 16 edges.  Pre: almost large type.
bool brute_orientation_exists(const LabeledGraph& g,
                              const OrientationOptions& options = {});

// Every ordered embedding of the pattern: for paths both directions of every
// full path that fits (2-path: some label above 2; 3-path: all labels 2);
// for triangles the canonical a < b < c triples.
std::vector<SubgraphWitness> brute_full_subgraphs(const LabeledGraph& g,
                                                  SubgraphWitness::Kind kind);

}  // namespace atlink::oracle
