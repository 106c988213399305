#include <doctest.h>

#include <string>
#include <vector>

#include "atlink/certificate.hpp"
#include "atlink/classify.hpp"
#include "atlink/errors.hpp"
#include "atlink/graph.hpp"
#include "atlink/link.hpp"
#include "atlink/presentation.hpp"

using namespace atlink;

namespace {

LabeledGraph path_2_3() {
  return LabeledGraph::make({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}});
}

RankOneCertificate two_path_cert() {
  const auto g = path_2_3();
  const auto w = find_full_2path_big_label(g);
  REQUIRE(w.has_value());
  return certify_two_path(g, *w, DirectedLabeledGraph(g, {true, true}));
}

LabeledGraph triangle_all3() {
  return LabeledGraph::make({"a", "b", "c"},
                            {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 3}});
}

}  // namespace

TEST_CASE("two path certificate carries the witness and seven assertions") {
  const auto cert = two_path_cert();
  CHECK(cert.construction == "two_path");
  CHECK(cert.metric == LinkMetric::Isosceles);
  CHECK(cert.embedding == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(cert.witness.size() == 3);
  CHECK(cert.witness[0].gen == "alpha[b--c][3]");
  CHECK(cert.witness[1].gen == "c");
  CHECK(cert.witness[2].gen == "a");
  CHECK(cert.assertions.size() == 7);

  // The flattened witness conjugates through the big edge.
  const Word expanded = expand_to_standard(
      cert.witness, DirectedLabeledGraph(path_2_3(), {true, true}));
  CHECK(free_reduce(expanded) == cert.witness_standard);
  REQUIRE(cert.witness_standard.size() == 5);
  CHECK(cert.witness_standard[0].gen == "c");
  CHECK(cert.witness_standard[0].exp == -1);

  const auto result = verify_certificate(cert);
  CHECK(result.ok);
  CHECK(result.failures.empty());
}

TEST_CASE("three path certificate on the all-2 chain") {
  const auto g = LabeledGraph::make(
      {"v1", "v2", "v3", "v4"},
      {{"v1", "v2", 2}, {"v2", "v3", 2}, {"v3", "v4", 2}});
  const auto w = find_full_3path_all2(g);
  REQUIRE(w.has_value());
  const auto cert =
      certify_three_path(g, *w, DirectedLabeledGraph(g, {true, true, true}));
  CHECK(cert.construction == "three_path");
  CHECK(cert.metric == LinkMetric::Isosceles);
  REQUIRE(cert.witness.size() == 2);
  CHECK(cert.witness[0].gen == "x[v1--v2]");
  CHECK(cert.witness[1].gen == "x[v3--v4]");
  CHECK(cert.assertions.size() == 4);

  REQUIRE(cert.witness_standard.size() == 4);
  CHECK(cert.witness_standard[0].gen == "v1");
  CHECK(cert.witness_standard[3].gen == "v4");

  CHECK(verify_certificate(cert).ok);
}

TEST_CASE("triangle certificate uses the equilateral metric") {
  const auto g = triangle_all3();
  const DirectedLabeledGraph dg(g, {true, false, true});
  const auto tri = find_triangle(g);
  REQUIRE(tri.has_value());
  const auto cert = certify_triangle(g, dg, *tri);
  CHECK(cert.construction == "triangle");
  CHECK(cert.metric == LinkMetric::Equilateral);
  REQUIRE(cert.witness.size() == 2);
  CHECK(cert.witness[0].gen == "x[b--c]");
  CHECK(cert.witness[1].gen == "alpha[a--b][3]");
  CHECK(cert.assertions.size() == 13);
  CHECK(cert.assertions[0].kind == CertAssertion::Kind::DistanceAtLeast);
  CHECK(cert.assertions[0].bound == 13);

  CHECK(verify_certificate(cert).ok);
}

TEST_CASE("triangle certificate needs the cyclic direction") {
  // A transitive direction already fails the global orientation check, which
  // is a precondition rather than a certificate defect.
  const auto g = triangle_all3();
  const auto tri = find_triangle(g);
  CHECK_THROWS_AS(certify_triangle(g, direct_lexicographically(g), *tri),
                  PreconditionError);
}

TEST_CASE("constructors reject mismatched witnesses and directions") {
  const auto g = path_2_3();
  const auto tri_witness = SubgraphWitness{
      SubgraphWitness::Kind::Triangle, {0, 1, 2}, {2, 3, 2}};
  CHECK_THROWS_AS(
      certify_two_path(g, tri_witness, DirectedLabeledGraph(g, {true, true})),
      CertificateError);

  const auto w = find_full_2path_big_label(g);
  REQUIRE(w.has_value());
  // Both edges reversed: the leading edge no longer runs v1 -> v2.
  CHECK_THROWS_AS(
      certify_two_path(g, *w, DirectedLabeledGraph(g, {false, false})),
      CertificateError);
}

TEST_CASE("serialization round trips and still verifies") {
  const auto cert = two_path_cert();
  const auto text = serialize_certificate(cert);
  const auto back = parse_certificate(text);
  CHECK(serialize_certificate(back) == text);
  CHECK(verify_certificate(back).ok);
}

TEST_CASE("tampered distance values fail verification") {
  auto cert = two_path_cert();
  bool touched = false;
  for (auto& a : cert.assertions) {
    if (a.kind == CertAssertion::Kind::DistanceEquals) {
      a.bound -= 1;
      touched = true;
      break;
    }
  }
  REQUIRE(touched);
  const auto result = verify_certificate(cert);
  CHECK(!result.ok);
  CHECK(!result.failures.empty());
}

TEST_CASE("tampered lower bounds fail verification") {
  auto cert = two_path_cert();
  REQUIRE(cert.assertions[0].kind == CertAssertion::Kind::DistanceAtLeast);
  cert.assertions[0].bound = 999;
  CHECK(!verify_certificate(cert).ok);
}

TEST_CASE("tampered geodesic paths fail verification") {
  auto cert = two_path_cert();
  bool touched = false;
  for (auto& a : cert.assertions) {
    if (a.kind == CertAssertion::Kind::UniqueGeodesic) {
      REQUIRE(a.path.size() == 4);
      std::swap(a.path[1], a.path[2]);
      touched = true;
      break;
    }
  }
  REQUIRE(touched);
  CHECK(!verify_certificate(cert).ok);
}

TEST_CASE("points that do not resolve raise a certificate error") {
  auto cert = two_path_cert();
  cert.assertions[0].p = LinkPointSpec::vertex("nonsense", 1);
  CHECK_THROWS_AS(verify_certificate(cert), CertificateError);
}

TEST_CASE("verification against a mismatched metric is refused") {
  const auto cert = two_path_cert();
  const auto link = build_link(cert.graph, LinkMetric::Equilateral);
  CHECK_THROWS_AS(verify_certificate(cert, link), CertificateError);
}

TEST_CASE("classifier and direct construction agree") {
  const auto report = classify(path_2_3());
  REQUIRE(report.certificate.has_value());
  CHECK(serialize_certificate(*report.certificate) ==
        serialize_certificate(two_path_cert()));
}
