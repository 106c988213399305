#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "atlink/graph.hpp"
#include "atlink/selftest.hpp"

using namespace atlink;

TEST_CASE("graph enumeration is exhaustive and deterministic") {
  std::vector<std::string> seen;
  for_each_graph(3, {2, 3}, false,
                 [&](const LabeledGraph& g) { seen.push_back(serialize_graph(g)); });
  CHECK(seen.size() == 27);  // three states per possible edge
  CHECK(std::set<std::string>(seen.begin(), seen.end()).size() == seen.size());

  std::vector<std::string> again;
  for_each_graph(3, {2, 3}, false,
                 [&](const LabeledGraph& g) { again.push_back(serialize_graph(g)); });
  CHECK(again == seen);
}

TEST_CASE("triangle-only filtering drops exactly the cliques") {
  int all = 0, tf = 0;
  for_each_graph(3, {2, 3}, false, [&](const LabeledGraph&) { ++all; });
  for_each_graph(3, {2, 3}, true, [&](const LabeledGraph&) { ++tf; });
  CHECK(all == 27);
  // The only 3-clique is the full triangle, with 2^3 labelings.
  CHECK(tf == 19);
}

TEST_CASE("the default sweep is green with frozen counts") {
  SelftestOptions options;
  options.max_vertices = 3;
  const auto report = run_selftest(options);
  CHECK(report.ok());
  REQUIRE(report.suites.size() == 8);

  CHECK(report.suites[0].name == "triangle_free_equivalence");
  CHECK(report.suites[0].checked == 19);
  CHECK(report.suites[1].name == "witness_search_vs_brute");
  CHECK(report.suites[1].checked == 31);
  CHECK(report.suites[2].name == "link_distance_vs_floyd_warshall");
  CHECK(report.suites[2].checked == 62);
  CHECK(report.suites[3].name == "systole_vs_brute");
  CHECK(report.suites[3].checked == 62);
  CHECK(report.suites[4].name == "link_structure");
  CHECK(report.suites[4].checked == 62);
  CHECK(report.suites[5].name == "orientation_search_vs_brute");
  CHECK(report.suites[5].checked == 20);
  CHECK(report.suites[6].name == "triangular_equivalence");
  CHECK(report.suites[6].checked == 31);
  CHECK(report.suites[7].name == "join_invariants");
  CHECK(report.suites[7].checked == 31);

  for (const auto& suite : report.suites) {
    CHECK(suite.mismatches == 0);
    CHECK(suite.failures.empty());
  }
}

TEST_CASE("worker count does not change the outcome") {
  SelftestOptions serial;
  serial.max_vertices = 3;
  SelftestOptions parallel = serial;
  parallel.jobs = 4;
  CHECK(serialize_selftest(run_selftest(serial)) ==
        serialize_selftest(run_selftest(parallel)));
}

TEST_CASE("sweep serialization is shaped for machines") {
  SelftestOptions options;
  options.max_vertices = 2;
  const auto text = serialize_selftest(run_selftest(options));
  CHECK(text.find("\"ok\": true") != std::string::npos);
  CHECK(text.find("\"suites\"") != std::string::npos);
  CHECK(text.find("\"mismatches\": 0") != std::string::npos);
}
