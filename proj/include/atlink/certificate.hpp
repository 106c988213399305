#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atlink/link.hpp"
#include "atlink/orientation.hpp"

namespace atlink {

// Serializable reference to a point of a link.  Vertices are addressed by
// generator name and sign, interior points by the relation and corner whose
// edge carries them plus the integer offset from that edge's a endpoint;
// both survive a rebuild of the same link.
struct LinkPointSpec {
  bool is_vertex = true;
  std::string gen;  // vertex form
  int sign = -1;
  int relation = 0;  // interior form
  Corner corner = Corner::Start;
  int offset = 0;

  static LinkPointSpec vertex(std::string gen, int sign);
  static LinkPointSpec interior(int relation, Corner corner, int offset);
  std::string describe() const;
};

// One checkable claim about link geometry.  All bounds are integer angle
// units; strict inequalities are stored as the next integer up.
struct CertAssertion {
  enum class Kind {
    DistanceAtLeast,   // d(p, q) >= bound (unreachable passes)
    DistanceEquals,    // d(p, q) == bound
    UniqueGeodesic,    // exactly one geodesic p..q, its vertex course = path
    NoPiPathThrough,   // d(p, mid) + d(mid, q) >= 13, i.e. exceeds pi
  };
  Kind kind = Kind::DistanceAtLeast;
  LinkPointSpec p;
  LinkPointSpec q;
  LinkPointSpec mid;               // NoPiPathThrough only
  int bound = 0;                   // DistanceAtLeast / DistanceEquals
  std::vector<LinkPointSpec> path; // UniqueGeodesic only
  std::string describe() const;
};

// A verifiable witness that the group of the carried directed graph has a
// rank-one element: the witness word plus the link inequalities that the
// construction requires.  Certificates embed the directed graph so they can
// be re-checked from the file alone.
struct RankOneCertificate {
  std::string construction;  // "two_path", "three_path", "triangle"
  LinkMetric metric = LinkMetric::Isosceles;
  DirectedLabeledGraph graph;
  std::vector<std::string> embedding;  // witness vertices, in witness order
  Word witness;                        // over the triangular generators
  Word witness_standard;               // the same word over vertex generators
  std::vector<CertAssertion> assertions;
};

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> failures;
};

// Re-evaluates every assertion against the given link.  Throws
// CertificateError when the certificate does not fit the link (metric
// mismatch, unknown generator, missing relation).
VerifyResult verify_certificate(const RankOneCertificate& cert, const LinkGraph& link);

// Builds the link the certificate was issued for and verifies against it.
VerifyResult verify_certificate(const RankOneCertificate& cert);

// Witness alpha[e2][n] v3 v1 on a full directed path v1 -> v2 -> v3 whose
// second label n is at least 3, in the isosceles metric.  Throws
// CertificateError if the witness does not embed as claimed, the direction
// disagrees, or any assertion fails.
RankOneCertificate certify_two_path(const LabeledGraph& g, const SubgraphWitness& w,
                                    const DirectedLabeledGraph& dg);

// Witness x[e1] x[e3] on a full directed path v1 -> v2 -> v3 -> v4 with all
// labels 2, in the isosceles metric.
RankOneCertificate certify_three_path(const LabeledGraph& g, const SubgraphWitness& w,
                                      const DirectedLabeledGraph& dg);

// Witness x[e2] alpha[e1][3] on a directed 2-subpath v1 -> v2 -> v3 of a
// directed 3-cycle, in the equilateral metric.  The subpath starts at the
// canonical-least triangle vertex.  The two auxiliary interior points sit at
// the midpoints of the corner edges the witness axis crosses:
// the start corner of x[e2] = alpha[e2][n] v2 and the end corner of
// x[e1] = v2 alpha[e1][3].  Pre: the orientation validates.
RankOneCertificate certify_triangle(const LabeledGraph& g, const DirectedLabeledGraph& dg,
                               const SubgraphWitness& triangle);

std::string serialize_certificate(const RankOneCertificate& cert);
RankOneCertificate parse_certificate(const std::string& text);

}  // namespace atlink
