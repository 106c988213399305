#include <doctest.h>

#include <string>
#include <vector>

#include "atlink/classify.hpp"
#include "atlink/graph.hpp"
#include "atlink/link.hpp"

using namespace atlink;

namespace {

using Names = std::vector<std::string>;

LabeledGraph two_vertices(int label) {
  if (label == 0) return LabeledGraph::make({"s", "t"}, {});
  return LabeledGraph::make({"s", "t"}, {{"s", "t", label}});
}

}  // namespace

TEST_CASE("verdict names are stable") {
  CHECK(verdict_name(Verdict::AcylindricallyHyperbolic) ==
        "AcylindricallyHyperbolic");
  CHECK(verdict_name(Verdict::Reducible) == "Reducible");
  CHECK(verdict_name(Verdict::SmallCase) == "SmallCase");
  CHECK(verdict_name(Verdict::OutOfMethodScope) == "OutOfMethodScope");
}

TEST_CASE("tiny vertex counts fall to the small cases") {
  const auto empty = classify(LabeledGraph::make({}, {}));
  CHECK(empty.verdict == Verdict::SmallCase);
  CHECK(empty.route == "small_case");
  CHECK(empty.description == "trivial group");

  const auto one = classify(LabeledGraph::make({"s"}, {}));
  CHECK(one.verdict == Verdict::SmallCase);
  CHECK(one.description ==
        "infinite cyclic group; its central quotient is trivial");
  CHECK(one.flags.at("centerless") == false);
}

TEST_CASE("two generators split by the edge label") {
  const auto free2 = classify(two_vertices(0));
  CHECK(free2.verdict == Verdict::AcylindricallyHyperbolic);
  REQUIRE(free2.split.has_value());
  CHECK(free2.split->first == Names{"s"});
  CHECK(free2.split->second == Names{"t"});
  CHECK(free2.description == "free group of rank 2");

  const auto flat = classify(two_vertices(2));
  CHECK(flat.verdict == Verdict::Reducible);
  CHECK(flat.factors == Names{"Z", "Z"});
  CHECK(flat.description == "direct product Z x Z");

  const auto odd = classify(two_vertices(5));
  CHECK(odd.verdict == Verdict::SmallCase);
  CHECK(odd.description ==
        "dihedral type; central quotient Z/5 * Z/2 is virtually free");

  const auto even = classify(two_vertices(6));
  CHECK(even.verdict == Verdict::SmallCase);
  CHECK(even.description ==
        "dihedral type; central quotient Z/3 * Z is virtually free");
}

TEST_CASE("complete bipartite graphs with labels 2 reduce to a product") {
  const auto g = LabeledGraph::make({"a1", "b1", "a2", "b2", "b3"},
                                    {{"a1", "b1", 2},
                                     {"a1", "b2", 2},
                                     {"a1", "b3", 2},
                                     {"a2", "b1", 2},
                                     {"a2", "b2", 2},
                                     {"a2", "b3", 2}});
  const auto report = classify(g);
  CHECK(report.verdict == Verdict::Reducible);
  CHECK(report.route == "complete_bipartite_join");
  REQUIRE(report.split.has_value());
  CHECK(report.split->first == Names{"a1", "a2"});
  CHECK(report.split->second == Names{"b1", "b2", "b3"});
  CHECK(report.factors == Names{"F(2)", "F(3)"});
  CHECK(report.description == "direct product F(2) x F(3)");
  CHECK(report.flags.at("irreducible") == false);
  CHECK(!report.certificate.has_value());
}

TEST_CASE("the all-2 square is a complete bipartite join") {
  const auto g = LabeledGraph::make(
      {"a", "b", "c", "d"},
      {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"a", "d", 2}});
  const auto report = classify(g);
  CHECK(report.verdict == Verdict::Reducible);
  CHECK(report.route == "complete_bipartite_join");
  REQUIRE(report.split.has_value());
  CHECK(report.split->first == Names{"a", "c"});
  CHECK(report.split->second == Names{"b", "d"});
  CHECK(report.factors == Names{"F(2)", "F(2)"});
}

TEST_CASE("a disconnected graph is a free product") {
  const auto g = LabeledGraph::make({"a", "b", "c", "d"},
                                    {{"a", "b", 2}, {"c", "d", 4}});
  const auto report = classify(g);
  CHECK(report.verdict == Verdict::AcylindricallyHyperbolic);
  CHECK(report.route == "disconnected_free_product");
  REQUIRE(report.split.has_value());
  CHECK(report.split->first == Names{"a", "b"});
  CHECK(report.split->second == Names{"c", "d"});
  CHECK(report.flags.at("centerless") == true);
  CHECK(!report.certificate.has_value());
}

TEST_CASE("a big label across a full 2-path wins a certificate") {
  const auto g = LabeledGraph::make({"a", "b", "c"},
                                    {{"a", "b", 2}, {"b", "c", 3}});
  const auto report = classify(g);
  CHECK(report.verdict == Verdict::AcylindricallyHyperbolic);
  CHECK(report.route == "two_path_witness");
  REQUIRE(report.certificate.has_value());
  CHECK(report.certificate->construction == "two_path");
  CHECK(report.certificate->metric == LinkMetric::Isosceles);
}

TEST_CASE("the all-2 chain of three edges wins a certificate") {
  const auto g = LabeledGraph::make(
      {"v1", "v2", "v3", "v4"},
      {{"v1", "v2", 2}, {"v2", "v3", 2}, {"v3", "v4", 2}});
  const auto report = classify(g);
  CHECK(report.verdict == Verdict::AcylindricallyHyperbolic);
  CHECK(report.route == "three_path_witness");
  REQUIRE(report.certificate.has_value());
  CHECK(report.certificate->construction == "three_path");
}

TEST_CASE("the all-3 triangle is certified through a direction") {
  const auto g = LabeledGraph::make(
      {"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 3}});
  const auto report = classify(g);
  CHECK(report.verdict == Verdict::AcylindricallyHyperbolic);
  CHECK(report.route == "triangle_witness");
  CHECK(report.orientation_method == "cone");
  REQUIRE(report.certificate.has_value());
  CHECK(report.certificate->construction == "triangle");
  CHECK(report.certificate->metric == LinkMetric::Equilateral);
}

TEST_CASE("the complete graph on four vertices defeats the search") {
  const auto g = LabeledGraph::make({"a", "b", "c", "d"},
                                    {{"a", "b", 3},
                                     {"a", "c", 3},
                                     {"a", "d", 3},
                                     {"b", "c", 3},
                                     {"b", "d", 3},
                                     {"c", "d", 3}});
  const auto report = classify(g);
  CHECK(report.verdict == Verdict::OutOfMethodScope);
  CHECK(report.route == "no_appropriate_direction");
  CHECK(report.description ==
        "exhaustive search found no appropriate direction of the edges");
}

TEST_CASE("a label-2 edge on a triangle leaves the method") {
  const auto g = LabeledGraph::make(
      {"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}, {"a", "c", 3}});
  const auto report = classify(g);
  CHECK(report.verdict == Verdict::OutOfMethodScope);
  CHECK(report.route == "outside_hypotheses");
  CHECK(report.description == "3-cycle a,b,c carries a label-2 edge");
}

TEST_CASE("a lightly labeled square next to a triangle leaves the method") {
  const auto g = LabeledGraph::make({"a", "b", "c", "d", "e"},
                                    {{"a", "b", 3},
                                     {"b", "c", 3},
                                     {"a", "c", 3},
                                     {"a", "d", 2},
                                     {"d", "e", 2},
                                     {"e", "b", 2}});
  const auto report = classify(g);
  CHECK(report.verdict == Verdict::OutOfMethodScope);
  CHECK(report.route == "outside_hypotheses");
  CHECK(report.description == "4-cycle a,b,e,d has fewer than two labels above 2");
}

TEST_CASE("the all-2 star reduces along its hub either way") {
  const auto g = LabeledGraph::make(
      {"hub", "u", "v", "w"},
      {{"hub", "u", 2}, {"hub", "v", 2}, {"hub", "w", 2}});
  const auto via_dispatch = classify(g);
  CHECK(via_dispatch.verdict == Verdict::Reducible);
  CHECK(via_dispatch.route == "complete_bipartite_join");
  CHECK(via_dispatch.factors == Names{"Z", "F(3)"});

  const auto via_cone = classify_almost_large(g);
  CHECK(via_cone.verdict == Verdict::Reducible);
  CHECK(via_cone.route == "cone_join");
  REQUIRE(via_cone.split.has_value());
  CHECK(via_cone.split->first == Names{"hub"});
  CHECK(via_cone.split->second == Names{"u", "v", "w"});
  CHECK(via_cone.description == "direct product Z x F(3)");
}

TEST_CASE("report serialization names the evidence kind") {
  const auto cert_report = classify(LabeledGraph::make(
      {"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}}));
  const auto cert_json = serialize_report(cert_report);
  CHECK(cert_json.find("\"kind\": \"rank_one_certificate\"") != std::string::npos);
  CHECK(cert_json.find("\"verdict\": \"AcylindricallyHyperbolic\"") !=
        std::string::npos);

  const auto join_json = serialize_report(classify(two_vertices(2)));
  CHECK(join_json.find("\"kind\": \"join_decomposition\"") != std::string::npos);

  const auto split_json = serialize_report(classify(two_vertices(0)));
  CHECK(split_json.find("\"kind\": \"free_product_split\"") != std::string::npos);

  const auto small_json = serialize_report(classify(two_vertices(5)));
  CHECK(small_json.find("\"kind\": \"small_case\"") != std::string::npos);

  const auto out_json = serialize_report(classify(LabeledGraph::make(
      {"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}, {"a", "c", 3}})));
  CHECK(out_json.find("\"kind\": \"hypothesis_violation\"") != std::string::npos);

  const auto text = report_text(cert_report);
  CHECK(text.find("verdict: AcylindricallyHyperbolic") != std::string::npos);
  CHECK(text.find("route: two_path_witness") != std::string::npos);
}
