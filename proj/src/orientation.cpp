#include "atlink/orientation.hpp"

#include <algorithm>

namespace atlink {

namespace {

struct PatternSlot {
  int dir = 0;       // +1 with the arrow, -1 against it, 0 unconstrained
  bool big = false;  // label must exceed 2
};

struct Pattern {
  const char* name;
  std::vector<PatternSlot> slots;
};

const std::vector<Pattern>& triangle_patterns() {
  static const std::vector<Pattern> table = {
      {"directed-triangle", {{+1, true}, {+1, true}, {+1, true}}},
  };
  return table;
}

const std::vector<Pattern>& square_patterns() {
  static const std::vector<Pattern> table = {
      {"opposite-pair", {{+1, true}, {0, false}, {-1, true}, {0, false}}},
      {"adjacent-pair", {{+1, true}, {+1, true}, {0, false}, {0, false}}},
  };
  return table;
}

bool traversal_matches(const DirectedLabeledGraph& dg, const std::vector<int>& seq,
                       const Pattern& pattern, size_t rotation) {
  const size_t k = seq.size();
  for (size_t i = 0; i < k; ++i) {
    const int u = seq[(rotation + i) % k];
    const int v = seq[(rotation + i + 1) % k];
    const int e = dg.base().edge_index(u, v);
    const PatternSlot& slot = pattern.slots[i];
    if (slot.big && dg.base().edge(e).label <= 2) return false;
    if (slot.dir == +1 && !dg.directed_from(e, u, v)) return false;
    if (slot.dir == -1 && !dg.directed_from(e, v, u)) return false;
  }
  return true;
}

// Name of the first pattern matched by some rotation (and, if allowed, the
// reversed sense) of the cycle, or nullptr.
const char* match_cycle(const DirectedLabeledGraph& dg, const std::vector<int>& cycle,
                        const std::vector<Pattern>& patterns,
                        const OrientationOptions& options) {
  std::vector<std::vector<int>> senses = {cycle};
  if (options.allow_reflections) {
    std::vector<int> reversed = {cycle[0]};
    for (size_t i = cycle.size() - 1; i >= 1; --i) reversed.push_back(cycle[i]);
    senses.push_back(std::move(reversed));
  }
  for (const auto& pattern : patterns)
    for (const auto& sense : senses)
      for (size_t rot = 0; rot < cycle.size(); ++rot)
        if (traversal_matches(dg, sense, pattern, rot)) return pattern.name;
  return nullptr;
}

}  // namespace

OrientationReport validate_orientation(const DirectedLabeledGraph& dg,
                                       const OrientationOptions& options) {
  const LabeledGraph& g = dg.base();
  if (!is_almost_large_type(g))
    throw PreconditionError("graph is not of almost large type");
  OrientationReport report;
  report.valid = true;
  for (const auto& t : all_triangles(g)) {
    CycleCheck check;
    check.vertices = {t[0], t[1], t[2]};
    const char* name = match_cycle(dg, check.vertices, triangle_patterns(), options);
    check.ok = name != nullptr;
    if (check.ok)
      check.pattern = name;
    else
      check.reason = "3-cycle is not cyclically directed";
    report.valid = report.valid && check.ok;
    report.cycles.push_back(std::move(check));
  }
  for (const auto& q : all_four_cycles(g)) {
    CycleCheck check;
    check.vertices = {q[0], q[1], q[2], q[3]};
    const char* name = match_cycle(dg, check.vertices, square_patterns(), options);
    check.ok = name != nullptr;
    if (check.ok)
      check.pattern = name;
    else
      check.reason = "4-cycle has no admissible pair of big-label edges";
    report.valid = report.valid && check.ok;
    report.cycles.push_back(std::move(check));
  }
  return report;
}

DirectedLabeledGraph orient_cone(const LabeledGraph& g, int apex) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (v != apex && !g.adjacent(apex, v))
      throw PreconditionError("apex \"" + g.name(apex) + "\" is not adjacent to \"" +
                              g.name(v) + "\"");

  // The part under the cone, with its own canonical order.
  std::vector<int> part;
  for (int v = 0; v < n; ++v)
    if (v != apex) part.push_back(v);
  std::vector<EdgeSpec> part_edges;
  for (const auto& e : g.edges())
    if (e.u != apex && e.v != apex)
      part_edges.push_back({g.name(e.u), g.name(e.v), e.label});
  std::vector<std::string> part_names;
  for (int v : part) part_names.push_back(g.name(v));
  const LabeledGraph sub = LabeledGraph::make(part_names, part_edges);

  if (!is_square_free(sub)) throw PreconditionError("cone part contains a 4-cycle");
  const auto coloring = bipartite_coloring(sub);
  if (!coloring) throw PreconditionError("cone part is not bipartite");

  // color -1: isolated under the cone; otherwise the 2-coloring.
  std::vector<int> role(n, -1);
  for (size_t i = 0; i < part.size(); ++i)
    if (!sub.neighbors(static_cast<int>(i)).empty()) role[part[i]] = (*coloring)[i];

  for (const auto& e : g.edges()) {
    const bool touches_apex = e.u == apex || e.v == apex;
    const int other = e.u == apex ? e.v : e.u;
    if (!touches_apex) {
      if (e.label <= 2)
        throw PreconditionError("label 2 on edge " + g.edge_key(g.edge_index(e.u, e.v)) +
                                " inside the cone part");
    } else if (role[other] != -1 && e.label <= 2) {
      throw PreconditionError("label 2 on edge " + g.edge_key(g.edge_index(e.u, e.v)) +
                              " from the apex to a non-isolated vertex");
    }
  }

  std::vector<bool> forward(g.edge_count(), true);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    int s, t;
    if (ed.u != apex && ed.v != apex) {
      // white (color 0) -> black (color 1)
      s = role[ed.u] == 0 ? ed.u : ed.v;
      t = role[ed.u] == 0 ? ed.v : ed.u;
    } else {
      const int other = ed.u == apex ? ed.v : ed.u;
      if (role[other] == -1)
        continue;  // apex to isolated vertex: canonical direction
      s = role[other] == 0 ? apex : other;
      t = role[other] == 0 ? other : apex;
    }
    forward[e] = s == ed.u;
    (void)t;
  }
  DirectedLabeledGraph dg(g, std::move(forward));
  if (!validate_orientation(dg).valid)
    throw std::logic_error("cone orientation failed validation");
  return dg;
}

DirectedLabeledGraph orient_square_free(const LabeledGraph& g) {
  if (!is_square_free(g)) throw PreconditionError("graph contains a 4-cycle");
  if (!is_almost_large_type(g)) throw PreconditionError("graph is not of almost large type");
  std::vector<bool> forward(g.edge_count(), true);
  for (const auto& t : all_triangles(g)) {
    // a -> b -> c -> a; square-freeness keeps the triangles edge-disjoint.
    forward[g.edge_index(t[0], t[1])] = t[0] < t[1];
    forward[g.edge_index(t[1], t[2])] = t[1] < t[2];
    forward[g.edge_index(t[2], t[0])] = t[2] < t[0];
  }
  DirectedLabeledGraph dg(g, std::move(forward));
  if (!validate_orientation(dg).valid)
    throw std::logic_error("square-free orientation failed validation");
  return dg;
}

std::optional<DirectedLabeledGraph> orient_search(const LabeledGraph& g,
                                                  const OrientationOptions& options) {
  if (!is_almost_large_type(g)) throw PreconditionError("graph is not of almost large type");

  // Cycles indexed by edges so each is checked as soon as fully assigned.
  struct Cycle {
    std::vector<int> vertices;
    std::vector<int> edges;
    bool triangle;
  };
  std::vector<Cycle> cycles;
  for (const auto& t : all_triangles(g))
    cycles.push_back({{t[0], t[1], t[2]},
                      {g.edge_index(t[0], t[1]), g.edge_index(t[1], t[2]),
                       g.edge_index(t[2], t[0])},
                      true});
  for (const auto& q : all_four_cycles(g))
    cycles.push_back({{q[0], q[1], q[2], q[3]},
                      {g.edge_index(q[0], q[1]), g.edge_index(q[1], q[2]),
                       g.edge_index(q[2], q[3]), g.edge_index(q[3], q[0])},
                      false});
  std::vector<std::vector<int>> cycles_of_edge(g.edge_count());
  for (size_t c = 0; c < cycles.size(); ++c)
    for (int e : cycles[c].edges) cycles_of_edge[e].push_back(static_cast<int>(c));

  std::vector<bool> forward(g.edge_count(), true);
  std::vector<bool> assigned(g.edge_count(), false);

  auto complete_cycles_ok = [&](int edge) {
    DirectedLabeledGraph dg(g, forward);
    for (int c : cycles_of_edge[edge]) {
      bool complete = true;
      for (int e : cycles[c].edges) complete = complete && assigned[e];
      if (!complete) continue;
      const auto& patterns = cycles[c].triangle ? triangle_patterns() : square_patterns();
      if (match_cycle(dg, cycles[c].vertices, patterns, options) == nullptr) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, int edge) -> bool {
    if (edge == g.edge_count()) return true;
    for (bool dir : {true, false}) {
      forward[edge] = dir;
      assigned[edge] = true;
      if (complete_cycles_ok(edge) && self(self, edge + 1)) return true;
      assigned[edge] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return DirectedLabeledGraph(g, std::move(forward));
}

std::optional<OrientationResult> try_orient(const LabeledGraph& g) {
  for (int apex = 0; apex < g.vertex_count(); ++apex) {
    try {
      return OrientationResult{orient_cone(g, apex), "cone"};
    } catch (const PreconditionError&) {
    }
  }
  if (is_square_free(g) && is_almost_large_type(g)) {
    try {
      return OrientationResult{orient_square_free(g), "square_free"};
    } catch (const PreconditionError&) {
    }
  }
  if (auto found = orient_search(g)) return OrientationResult{std::move(*found), "search"};
  return std::nullopt;
}

}  // namespace atlink
