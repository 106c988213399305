#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atlink/presentation.hpp"

namespace atlink {

// Piecewise-Euclidean metric put on the one relation cell x = a * b.  All
// lengths are integer multiples of the base angle unit (a full turn is 24
// units, a straight angle 12).
//
//               corner         Isosceles   Equilateral
//   start   (x^-, a^-)             3            4
//   end     (x^+, b^+)             3            4
//   middle  (a^+, b^-)             6            4
//
// The three corner angles of one cell always sum to 12.
enum class LinkMetric { Isosceles, Equilateral };

constexpr int kStraightAngle = 12;  // pi
constexpr int kFullTurn = 24;       // 2 pi

enum class Corner { Start, End, Middle };

// A direction at the unique base point: generator traversed away from the
// point (sign -1, rendered "-") or into it (sign +1, rendered "+").
struct LinkVertex {
  std::string gen;
  int sign = -1;
  bool operator==(const LinkVertex&) const = default;
};

struct LinkEdge {
  int a = 0;       // vertex index; start: x^-, end: x^+, middle: a^+
  int b = 0;       // vertex index; start: a^-, end: b^+, middle: b^-
  int weight = 0;  // angle units
  int relation = 0;
  Corner corner = Corner::Start;
};

// The link of the base point of the presentation complex: a finite weighted
// multigraph.  Vertex 2*i is generator i read outward ("-"), vertex 2*i+1
// inward ("+"); each relation contributes the three corner edges in the order
// start, end, middle, so edge ids are 3*relation + corner.
class LinkGraph {
 public:
  LinkMetric metric = LinkMetric::Isosceles;
  std::vector<LinkVertex> vertices;
  std::vector<LinkEdge> edges;

  int relation_count() const { return static_cast<int>(edges.size()) / 3; }
  int edge_id(int relation, Corner corner) const {
    return 3 * relation + static_cast<int>(corner);
  }
  // Vertex index for a named generator direction, or -1.
  int vertex_of(const std::string& gen, int sign) const;
};

LinkGraph build_link(const DirectedLabeledGraph& dg, LinkMetric metric);

// A point of the link: a vertex, or an interior point of an edge at an
// integer offset of angle units from the edge's a endpoint.
struct LinkPoint {
  int vertex = -1;
  int edge = -1;
  int offset = 0;

  static LinkPoint at_vertex(int v) { return {v, -1, 0}; }
  static LinkPoint interior(int edge, int offset) { return {-1, edge, offset}; }
  bool is_vertex() const { return vertex >= 0; }
  bool operator==(const LinkPoint&) const = default;
};

// Length of a shortest path, or empty when p and q lie in different
// components.  Unreachable is reported explicitly, never as a number.
std::optional<int> link_distance(const LinkGraph& link, const LinkPoint& p,
                                 const LinkPoint& q);

// A shortest path from p to q.  `vertices` lists the link vertices passed in
// order (for vertex endpoints this includes them); `edges` lists the edge ids
// used, so parallel edges give distinct paths.
struct LinkPath {
  std::vector<int> vertices;
  std::vector<int> edges;
};

// Every geodesic from p to q, in a deterministic order.  Empty when
// unreachable; a single empty path when p == q.
std::vector<LinkPath> geodesics_between(const LinkGraph& link, const LinkPoint& p,
                                        const LinkPoint& q);

// Length of the shortest locally injective closed loop: the shortest cycle
// of the multigraph, where a pair of parallel edges counts as a cycle.
// Empty when the link is a forest.
std::optional<int> systole(const LinkGraph& link);

// Whether every closed loop has length at least a full turn.
bool check_link_condition(const LinkGraph& link);

// JSON {"metric": "isosceles"|"equilateral",
//       "vertices": [{"gen":g,"sign":"+"|"-"}],
//       "edges": [{"a":i,"b":j,"w":u,"origin":{"relation":k,"corner":c}}]}.
std::string serialize_link(const LinkGraph& link);

}  // namespace atlink
