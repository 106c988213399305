#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atlink/errors.hpp"

namespace atlink {

// Edge of a finite simple labeled graph.  Endpoints are vertex indices with
// u < v in the canonical order (the declaration order of the vertex list).
// The label is an integer >= 2.
struct GraphEdge {
  int u = 0;
  int v = 0;
  int label = 2;
};

struct EdgeSpec {
  std::string u;
  std::string v;
  int label = 2;
};

// Finite simple graph with integer edge labels >= 2.  Vertices keep their
// declaration order; that order is the canonical total order used for every
// deterministic tie-break in this library.  Edges are stored sorted by
// endpoint pair.  Instances are immutable after construction.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  // Throws ParseError on duplicate vertices, unknown endpoints, self-loops,
  // duplicate edges, or labels below 2.
  static LabeledGraph make(std::vector<std::string> vertices,
                           const std::vector<EdgeSpec>& edges);

  // Bulk construction for sweeps: vertices "v1".."vn", edges already indexed
  // with u < v, sorted, distinct, labels >= 2.
  static LabeledGraph make_indexed(int n, const std::vector<GraphEdge>& edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphEdge& edge(int e) const { return edges_[e]; }

  // Index of a named vertex; ParseError if absent.
  int vertex_index(const std::string& name) const;

  bool adjacent(int u, int v) const { return label_at(u, v) != 0; }
  // Label of the edge u--v, or 0 if not adjacent.
  int label_at(int u, int v) const;
  // Edge index of u--v, or -1 if not adjacent.
  int edge_index(int u, int v) const;
  // Neighbors in canonical order.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  // "u--v" with endpoints in canonical order; identifies the edge in
  // generator names and serialized output.
  std::string edge_key(int e) const;

 private:
  std::vector<std::string> names_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> label_matrix_;  // n*n, 0 = non-adjacent
  std::vector<int> edge_matrix_;   // n*n, -1 = non-adjacent
};

// LabeledGraph together with an orientation of every edge.  source/target
// give the chosen direction; the underlying edge list and its order are
// those of the base graph.
class DirectedLabeledGraph {
 public:
  DirectedLabeledGraph() = default;
  // forward[e] true means edge e runs u -> v (canonical endpoint order).
  DirectedLabeledGraph(LabeledGraph base, std::vector<bool> forward);

  const LabeledGraph& base() const { return base_; }
  int source(int e) const { return forward_[e] ? base_.edge(e).u : base_.edge(e).v; }
  int target(int e) const { return forward_[e] ? base_.edge(e).v : base_.edge(e).u; }
  bool forward(int e) const { return forward_[e]; }
  // True if edge e is oriented from a to b.  Pre: a,b are its endpoints.
  bool directed_from(int e, int a, int b) const;

 private:
  LabeledGraph base_;
  std::vector<bool> forward_;
};

// Directs every edge from its canonical-smaller endpoint.
DirectedLabeledGraph direct_lexicographically(const LabeledGraph& g);

// Result of parsing graph JSON.  `directed` is engaged iff every edge in the
// input carried "directed": true.
struct ParsedGraph {
  LabeledGraph graph;
  std::optional<DirectedLabeledGraph> directed;
};

// Parses the JSON graph schema:
//   {"vertices": ["a", ...],
//    "edges": [{"source": "a", "target": "b", "label": 3, "directed": true}, ...]}
// Throws ParseError naming the offending element.
ParsedGraph parse_graph(const std::string& text);

// Inverse of parse_graph, canonical field order, 2-space indent.
std::string serialize_graph(const LabeledGraph& g);
std::string serialize_graph(const DirectedLabeledGraph& dg);

// An induced subgraph found by one of the search operations.  Vertices are
// listed in witness order (for paths: along the path); the invariant is that
// they induce exactly the claimed pattern in the host graph.
struct SubgraphWitness {
  enum class Kind { TwoPathBigLabel, ThreePathAll2, Triangle };
  Kind kind = Kind::Triangle;
  std::vector<int> vertices;
  std::vector<int> labels;  // labels along the path / around the triangle
};

// Checks that w's vertices induce exactly its claimed pattern in g.
bool witness_holds(const LabeledGraph& g, const SubgraphWitness& w);

// No edge of g lies in a 3-cycle iff no three vertices are mutually adjacent.
bool is_triangle_free(const LabeledGraph& g);

// Every 3-cycle has all labels > 2 and every 4-cycle (chords allowed) has at
// least two labels > 2.
bool is_almost_large_type(const LabeledGraph& g);

// No 4-cycle subgraph.
bool is_square_free(const LabeledGraph& g);

// Proper 2-coloring (color 0 for the canonical-first vertex of each
// component), or empty if an odd cycle exists.
std::optional<std::vector<int>> bipartite_coloring(const LabeledGraph& g);

// Components as vertex lists in canonical order, ordered by least vertex.
std::vector<std::vector<int>> connected_components(const LabeledGraph& g);

// Splits V into two non-empty parts with every cross pair an edge labeled 2,
// if possible.  Among all valid splits the first part is the lexicographically
// least (as a sorted vertex-index sequence).  Empty result: no such split.
std::optional<std::pair<std::vector<int>, std::vector<int>>> join_decompose(
    const LabeledGraph& g);

// Bipartition witnessing that g is complete bipartite with every label 2;
// the part containing the canonical-first vertex comes first.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
complete_bipartite_all2_parts(const LabeledGraph& g);

// Apex adjacent to all other vertices with label 2 everywhere and no edges
// among the others; canonical-first such apex.  Requires >= 2 vertices.
std::optional<int> cone_over_isolated_all2_apex(const LabeledGraph& g);

// First ordered triple (v1,v2,v3) in lexicographic order that induces exactly
// the two path edges, with n = label(v2,v3) >= 3 and, when both labels exceed
// 2, label(v1,v2) <= n.
std::optional<SubgraphWitness> find_full_2path_big_label(const LabeledGraph& g);

// First ordered quadruple inducing exactly a 3-edge path with all labels 2.
std::optional<SubgraphWitness> find_full_3path_all2(const LabeledGraph& g);

// First 3-cycle, as the lexicographically least triple a < b < c; labels are
// listed along a--b, b--c, c--a.
std::optional<SubgraphWitness> find_triangle(const LabeledGraph& g);

// All 3-cycles as triples a < b < c, lexicographic order.
std::vector<std::array<int, 3>> all_triangles(const LabeledGraph& g);

// All 4-cycles (a,b,c,d) with edges ab,bc,cd,da, deduplicated by rotation and
// reflection: a least, b < d.  Chords are irrelevant.
std::vector<std::array<int, 4>> all_four_cycles(const LabeledGraph& g);

}  // namespace atlink
