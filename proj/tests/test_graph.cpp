#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "atlink/errors.hpp"
#include "atlink/graph.hpp"

using namespace atlink;

namespace {

LabeledGraph path_2_3() {
  return LabeledGraph::make({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}});
}

std::string parse_failure(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& ex) {
    return ex.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse accepts a plain undirected graph") {
  auto parsed = parse_graph(R"({"vertices": ["s", "t"],
    "edges": [{"source": "t", "target": "s", "label": 5}]})");
  CHECK(parsed.graph.vertex_count() == 2);
  CHECK(parsed.graph.edge_count() == 1);
  CHECK(parsed.graph.label_at(0, 1) == 5);
  CHECK(parsed.graph.edge_key(0) == "s--t");
  CHECK(!parsed.directed.has_value());
}

TEST_CASE("parse keeps edge direction when every edge asks for it") {
  auto parsed = parse_graph(R"({"vertices": ["s", "t", "u"], "edges": [
    {"source": "t", "target": "s", "label": 3, "directed": true},
    {"source": "s", "target": "u", "label": 2, "directed": true}]})");
  REQUIRE(parsed.directed.has_value());
  const auto& dg = *parsed.directed;
  CHECK(dg.base().name(dg.source(0)) == "t");
  CHECK(dg.base().name(dg.target(0)) == "s");
  CHECK(dg.base().name(dg.source(1)) == "s");
  CHECK(dg.base().name(dg.target(1)) == "u");
}

TEST_CASE("edgeless input counts as directed") {
  auto parsed = parse_graph(R"({"vertices": ["s"]})");
  CHECK(parsed.directed.has_value());
}

TEST_CASE("parse failure diagnostics") {
  CHECK(parse_failure("[1]") == "top level must be an object");
  CHECK(parse_failure("{}") == "missing \"vertices\" array");
  CHECK(parse_failure("{\"vertices\": [1]}") == "vertex names must be strings");
  CHECK(parse_failure(R"({"vertices": ["a", "a"]})") ==
        "duplicate vertex \"a\"");
  CHECK(parse_failure(R"({"vertices": ["a", "b"],
      "edges": [{"source": "a", "target": "z", "label": 2}]})") ==
        "unknown endpoint \"z\" on edge a--z");
  CHECK(parse_failure(R"({"vertices": ["a"],
      "edges": [{"source": "a", "target": "a", "label": 2}]})") ==
        "self-loop at \"a\"");
  CHECK(parse_failure(R"({"vertices": ["a", "b"], "edges": [
      {"source": "a", "target": "b", "label": 2},
      {"source": "b", "target": "a", "label": 3}]})") ==
        "duplicate edge a--b");
  CHECK(parse_failure(R"({"vertices": ["a", "b"],
      "edges": [{"source": "a", "target": "b", "label": 1}]})") ==
        "label below 2 on edge a--b");
  CHECK(parse_failure(R"({"vertices": ["a", "b"],
      "edges": [{"source": "a", "target": "b", "label": 2.5}]})") ==
        "edge a--b needs an integer label");
  CHECK(parse_failure(R"({"vertices": ["a", "b", "c"], "edges": [
      {"source": "a", "target": "b", "label": 2, "directed": true},
      {"source": "b", "target": "c", "label": 2}]})") ==
        "either every edge is directed or none");
  CHECK(parse_failure("{").substr(0, 13) == "invalid JSON:");
}

TEST_CASE("serialization round trips byte for byte") {
  const auto parsed = parse_graph(serialize_graph(path_2_3()));
  CHECK(serialize_graph(parsed.graph) == serialize_graph(path_2_3()));

  const auto dg = direct_lexicographically(path_2_3());
  const auto reparsed = parse_graph(serialize_graph(dg));
  REQUIRE(reparsed.directed.has_value());
  CHECK(serialize_graph(*reparsed.directed) == serialize_graph(dg));
}

TEST_CASE("triangle and square detection") {
  const auto tri = LabeledGraph::make(
      {"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 3}});
  CHECK(!is_triangle_free(tri));
  CHECK(is_square_free(tri));
  CHECK(is_triangle_free(path_2_3()));

  const auto square = LabeledGraph::make({"a", "b", "c", "d"},
                                         {{"a", "b", 2},
                                          {"b", "c", 2},
                                          {"c", "d", 2},
                                          {"a", "d", 2}});
  CHECK(is_triangle_free(square));
  CHECK(!is_square_free(square));
  CHECK(all_four_cycles(square).size() == 1);
  const auto cyc = all_four_cycles(square)[0];
  CHECK(cyc == std::array<int, 4>{0, 1, 2, 3});
}

TEST_CASE("almost large type checks both cycle conditions") {
  const auto tri_all3 = LabeledGraph::make(
      {"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 3}});
  CHECK(is_almost_large_type(tri_all3));

  const auto tri_weak = LabeledGraph::make(
      {"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}, {"a", "c", 3}});
  CHECK(!is_almost_large_type(tri_weak));

  const auto square_one_big = LabeledGraph::make({"a", "b", "c", "d"},
                                                 {{"a", "b", 3},
                                                  {"b", "c", 2},
                                                  {"c", "d", 2},
                                                  {"a", "d", 2}});
  CHECK(!is_almost_large_type(square_one_big));

  const auto square_two_big = LabeledGraph::make({"a", "b", "c", "d"},
                                                 {{"a", "b", 3},
                                                  {"b", "c", 3},
                                                  {"c", "d", 2},
                                                  {"a", "d", 2}});
  CHECK(is_almost_large_type(square_two_big));
}

TEST_CASE("K_{2,3} with labels 2 splits into its two sides") {
  const auto g = LabeledGraph::make({"a1", "b1", "a2", "b2", "b3"},
                                    {{"a1", "b1", 2},
                                     {"a1", "b2", 2},
                                     {"a1", "b3", 2},
                                     {"a2", "b1", 2},
                                     {"a2", "b2", 2},
                                     {"a2", "b3", 2}});
  const auto parts = complete_bipartite_all2_parts(g);
  REQUIRE(parts.has_value());
  CHECK(parts->first == std::vector<int>{0, 2});
  CHECK(parts->second == std::vector<int>{1, 3, 4});

  const auto join = join_decompose(g);
  REQUIRE(join.has_value());
  CHECK(join->first == std::vector<int>{0, 2});
}

TEST_CASE("join decomposition picks the lexicographically least left part") {
  // The only non-join pair is p--s (label 3), so the pieces are {p,s}, {q},
  // {r}; the least admissible union containing p is {p,q,s}.
  const auto g = LabeledGraph::make({"p", "q", "r", "s"},
                                    {{"p", "s", 3},
                                     {"p", "q", 2},
                                     {"p", "r", 2},
                                     {"q", "r", 2},
                                     {"q", "s", 2},
                                     {"r", "s", 2}});
  const auto join = join_decompose(g);
  REQUIRE(join.has_value());
  CHECK(join->first == std::vector<int>{0, 1, 3});
  CHECK(join->second == std::vector<int>{2});
}

TEST_CASE("path graphs do not decompose as joins") {
  CHECK(!join_decompose(path_2_3()).has_value());
  CHECK(!complete_bipartite_all2_parts(path_2_3()).has_value());
}

TEST_CASE("full 2-path search normalizes the big label to the far edge") {
  // Labels (3, 2) along a--b--c: the normalized witness walks c, b, a.
  const auto g = LabeledGraph::make({"a", "b", "c"},
                                    {{"a", "b", 3}, {"b", "c", 2}});
  const auto w = find_full_2path_big_label(g);
  REQUIRE(w.has_value());
  CHECK(w->kind == SubgraphWitness::Kind::TwoPathBigLabel);
  CHECK(w->vertices == std::vector<int>{2, 1, 0});
  CHECK(w->labels == std::vector<int>{2, 3});
  CHECK(witness_holds(g, *w));
}

TEST_CASE("full 2-path search requires the middle labels in range") {
  // Both labels big and m > n: still a witness, walked from the small side.
  const auto g = LabeledGraph::make({"a", "b", "c"},
                                    {{"a", "b", 5}, {"b", "c", 3}});
  const auto w = find_full_2path_big_label(g);
  REQUIRE(w.has_value());
  CHECK(w->vertices == std::vector<int>{2, 1, 0});
  CHECK(w->labels == std::vector<int>{3, 5});

  // A chord makes the path non-full.
  const auto closed = LabeledGraph::make(
      {"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}, {"a", "c", 2}});
  CHECK(!find_full_2path_big_label(closed).has_value());

  // All labels 2: no big edge to anchor the witness.
  const auto small = LabeledGraph::make({"a", "b", "c"},
                                        {{"a", "b", 2}, {"b", "c", 2}});
  CHECK(!find_full_2path_big_label(small).has_value());
}

TEST_CASE("full 3-path search wants labels 2 everywhere") {
  const auto g = LabeledGraph::make(
      {"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}});
  const auto w = find_full_3path_all2(g);
  REQUIRE(w.has_value());
  CHECK(w->kind == SubgraphWitness::Kind::ThreePathAll2);
  CHECK(w->vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(w->labels == std::vector<int>{2, 2, 2});
  CHECK(witness_holds(g, *w));

  const auto off = LabeledGraph::make(
      {"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 3}, {"c", "d", 2}});
  CHECK(!find_full_3path_all2(off).has_value());
}

TEST_CASE("triangle enumeration is canonical") {
  const auto g = LabeledGraph::make({"a", "b", "c", "d"},
                                    {{"a", "b", 3},
                                     {"b", "c", 3},
                                     {"a", "c", 3},
                                     {"b", "d", 3},
                                     {"c", "d", 3}});
  const auto tris = all_triangles(g);
  REQUIRE(tris.size() == 2);
  CHECK(tris[0] == std::array<int, 3>{0, 1, 2});
  CHECK(tris[1] == std::array<int, 3>{1, 2, 3});
  const auto first = find_triangle(g);
  REQUIRE(first.has_value());
  CHECK(first->vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("connected components follow declaration order") {
  const auto g = LabeledGraph::make({"a", "b", "c", "d"},
                                    {{"a", "c", 2}, {"b", "d", 4}});
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 2});
  CHECK(comps[1] == std::vector<int>{1, 3});
}

TEST_CASE("cone over isolated vertices with labels 2 is recognized") {
  const auto star = LabeledGraph::make(
      {"hub", "u", "v", "w"}, {{"hub", "u", 2}, {"hub", "v", 2}, {"hub", "w", 2}});
  const auto apex = cone_over_isolated_all2_apex(star);
  REQUIRE(apex.has_value());
  CHECK(*apex == 0);

  const auto star_big = LabeledGraph::make(
      {"hub", "u", "v"}, {{"hub", "u", 2}, {"hub", "v", 3}});
  CHECK(!cone_over_isolated_all2_apex(star_big).has_value());
}

TEST_CASE("lexicographic direction always points to the later vertex") {
  const auto dg = direct_lexicographically(path_2_3());
  for (int e = 0; e < dg.base().edge_count(); ++e) {
    CHECK(dg.source(e) < dg.target(e));
    CHECK(dg.forward(e));
  }
  CHECK(dg.directed_from(0, 0, 1));
  CHECK(!dg.directed_from(0, 1, 0));
}

TEST_CASE("bipartite coloring exists exactly for even cycles") {
  const auto square = LabeledGraph::make({"a", "b", "c", "d"},
                                         {{"a", "b", 2},
                                          {"b", "c", 2},
                                          {"c", "d", 2},
                                          {"a", "d", 2}});
  const auto coloring = bipartite_coloring(square);
  REQUIRE(coloring.has_value());
  CHECK((*coloring)[0] != (*coloring)[1]);
  CHECK((*coloring)[0] == (*coloring)[2]);

  const auto tri = LabeledGraph::make(
      {"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 2}, {"a", "c", 2}});
  CHECK(!bipartite_coloring(tri).has_value());
}
