#include "atlink/classify.hpp"

#include <algorithm>

#include "json.hpp"

namespace atlink {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::AcylindricallyHyperbolic: return "AcylindricallyHyperbolic";
    case Verdict::Reducible: return "Reducible";
    case Verdict::SmallCase: return "SmallCase";
    case Verdict::OutOfMethodScope: return "OutOfMethodScope";
  }
  return "";
}

namespace {

std::vector<std::string> names_of(const LabeledGraph& g, const std::vector<int>& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.name(v));
  return out;
}

std::string free_factor(size_t rank) {
  return rank == 1 ? "Z" : "F(" + std::to_string(rank) + ")";
}

// Direction for a certificate on a path witness: the path edges follow the
// witness order, every other edge runs canonically.
DirectedLabeledGraph direct_along_witness(const LabeledGraph& g, const SubgraphWitness& w) {
  std::vector<bool> forward(g.edge_count(), true);
  for (size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    const int e = g.edge_index(w.vertices[i], w.vertices[i + 1]);
    forward[e] = g.edge(e).u == w.vertices[i];
  }
  return DirectedLabeledGraph(g, std::move(forward));
}

}  // namespace

ClassificationReport classify_small(const LabeledGraph& g) {
  const int n = g.vertex_count();
  if (n > 2) throw PreconditionError("small-case classification needs at most 2 vertices");
  ClassificationReport report;
  report.route = "small_case";
  if (n == 0) {
    report.verdict = Verdict::SmallCase;
    report.description = "trivial group";
    return report;
  }
  if (n == 1) {
    report.verdict = Verdict::SmallCase;
    report.description = "infinite cyclic group; its central quotient is trivial";
    report.flags = {{"centerless", false}};
    return report;
  }
  if (g.edge_count() == 0) {
    report.verdict = Verdict::AcylindricallyHyperbolic;
    report.description = "free group of rank 2";
    report.split = {{g.name(0)}, {g.name(1)}};
    report.flags = {{"centerless", true},
                    {"directly_indecomposable", true},
                    {"irreducible", true}};
    return report;
  }
  const int m = g.edge(0).label;
  if (m == 2) {
    report.verdict = Verdict::Reducible;
    report.description = "direct product Z x Z";
    report.split = {{g.name(0)}, {g.name(1)}};
    report.factors = {"Z", "Z"};
    report.flags = {{"directly_indecomposable", false}, {"irreducible", false}};
    return report;
  }
  report.verdict = Verdict::SmallCase;
  if (m % 2 == 1)
    report.description = "dihedral type; central quotient Z/" + std::to_string(m) +
                         " * Z/2 is virtually free";
  else
    report.description = "dihedral type; central quotient Z/" + std::to_string(m / 2) +
                         " * Z is virtually free";
  report.flags = {{"centerless", false}};
  return report;
}

ClassificationReport classify_triangle_free(const LabeledGraph& g) {
  if (g.vertex_count() < 3)
    throw PreconditionError("triangle-free classification needs at least 3 vertices");
  if (!is_triangle_free(g)) throw PreconditionError("graph has a 3-cycle");

  const auto bipartition = complete_bipartite_all2_parts(g);
  const auto components = connected_components(g);
  const bool disconnected = components.size() > 1;
  const auto two_path = find_full_2path_big_label(g);
  const auto three_path = find_full_3path_all2(g);
  const bool witnessed = disconnected || two_path || three_path;

  if (bipartition.has_value() == witnessed)
    throw std::logic_error(
        "triangle-free equivalence violated: complete-bipartite test and witness search "
        "agree where they must disagree");

  ClassificationReport report;
  if (!witnessed) {
    report.verdict = Verdict::Reducible;
    report.route = "complete_bipartite_join";
    report.split = {names_of(g, bipartition->first), names_of(g, bipartition->second)};
    report.factors = {free_factor(bipartition->first.size()),
                      free_factor(bipartition->second.size())};
    report.description = "direct product " + report.factors[0] + " x " + report.factors[1];
    report.flags = {{"directly_indecomposable", false}, {"irreducible", false}};
    return report;
  }

  report.verdict = Verdict::AcylindricallyHyperbolic;
  report.flags = {{"centerless", true},
                  {"directly_indecomposable", true},
                  {"irreducible", true}};
  if (disconnected) {
    report.route = "disconnected_free_product";
    std::vector<int> rest;
    for (size_t c = 1; c < components.size(); ++c)
      rest.insert(rest.end(), components[c].begin(), components[c].end());
    report.split = {names_of(g, components[0]), names_of(g, rest)};
    report.description = "free product across a disconnection";
    return report;
  }
  if (two_path) {
    report.route = "two_path_witness";
    report.certificate = certify_two_path(g, *two_path, direct_along_witness(g, *two_path));
    return report;
  }
  report.route = "three_path_witness";
  report.certificate = certify_three_path(g, *three_path, direct_along_witness(g, *three_path));
  return report;
}

ClassificationReport classify_almost_large(const LabeledGraph& g) {
  if (g.vertex_count() < 3)
    throw PreconditionError("almost-large classification needs at least 3 vertices");
  if (!is_almost_large_type(g))
    throw PreconditionError("graph is not of almost large type");

  if (const auto apex = cone_over_isolated_all2_apex(g)) {
    ClassificationReport report;
    report.verdict = Verdict::Reducible;
    report.route = "cone_join";
    std::vector<int> rest;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (v != *apex) rest.push_back(v);
    report.split = {std::vector<std::string>{g.name(*apex)}, names_of(g, rest)};
    report.factors = {"Z", free_factor(rest.size())};
    report.description = "direct product Z x " + report.factors[1];
    report.flags = {{"directly_indecomposable", false}, {"irreducible", false}};
    return report;
  }

  const auto oriented = try_orient(g);
  if (!oriented) {
    ClassificationReport report;
    report.verdict = Verdict::OutOfMethodScope;
    report.route = "no_appropriate_direction";
    report.description =
        "exhaustive search found no appropriate direction of the edges";
    return report;
  }

  if (is_triangle_free(g)) return classify_triangle_free(g);

  const auto triangle = find_triangle(g);
  ClassificationReport report;
  report.verdict = Verdict::AcylindricallyHyperbolic;
  report.route = "triangle_witness";
  report.orientation_method = oriented->method;
  report.certificate = certify_triangle(g, oriented->dg, *triangle);
  report.flags = {{"centerless", true},
                  {"directly_indecomposable", true},
                  {"irreducible", true}};
  return report;
}

ClassificationReport classify(const LabeledGraph& g) {
  if (g.vertex_count() <= 2) return classify_small(g);
  if (is_triangle_free(g)) return classify_triangle_free(g);
  if (is_almost_large_type(g)) return classify_almost_large(g);

  ClassificationReport report;
  report.verdict = Verdict::OutOfMethodScope;
  report.route = "outside_hypotheses";
  for (const auto& t : all_triangles(g)) {
    if (g.label_at(t[0], t[1]) <= 2 || g.label_at(t[1], t[2]) <= 2 ||
        g.label_at(t[0], t[2]) <= 2) {
      report.description = "3-cycle " + g.name(t[0]) + "," + g.name(t[1]) + "," +
                           g.name(t[2]) + " carries a label-2 edge";
      return report;
    }
  }
  for (const auto& q : all_four_cycles(g)) {
    int big = 0;
    for (int i = 0; i < 4; ++i)
      if (g.label_at(q[i], q[(i + 1) % 4]) > 2) ++big;
    if (big < 2) {
      report.description = "4-cycle " + g.name(q[0]) + "," + g.name(q[1]) + "," +
                           g.name(q[2]) + "," + g.name(q[3]) +
                           " has fewer than two labels above 2";
      return report;
    }
  }
  report.description = "hypotheses not met";
  return report;
}

std::string serialize_report(const ClassificationReport& report) {
  using ojson = nlohmann::ordered_json;
  ojson out;
  out["verdict"] = verdict_name(report.verdict);
  out["route"] = report.route;
  ojson evidence;
  if (report.certificate) {
    evidence["kind"] = "rank_one_certificate";
    if (!report.orientation_method.empty())
      evidence["orientation_method"] = report.orientation_method;
    evidence["certificate"] = ojson::parse(serialize_certificate(*report.certificate));
  } else if (report.split) {
    if (!report.factors.empty()) {
      evidence["kind"] = "join_decomposition";
      evidence["parts"] = ojson::array({report.split->first, report.split->second});
      evidence["factors"] = report.factors;
    } else {
      evidence["kind"] = "free_product_split";
      evidence["parts"] = ojson::array({report.split->first, report.split->second});
    }
    if (!report.description.empty()) evidence["description"] = report.description;
  } else if (report.verdict == Verdict::SmallCase) {
    evidence["kind"] = "small_case";
    evidence["description"] = report.description;
  } else {
    evidence["kind"] = "hypothesis_violation";
    evidence["description"] = report.description;
  }
  out["evidence"] = evidence;
  out["flags"] = report.flags.empty() ? ojson::object() : ojson(report.flags);
  return out.dump(2) + "\n";
}

std::string report_text(const ClassificationReport& report) {
  std::string out = "verdict: " + verdict_name(report.verdict) + "\n";
  out += "route: " + report.route + "\n";
  if (!report.description.empty()) out += "note: " + report.description + "\n";
  if (report.split) {
    auto join = [](const std::vector<std::string>& names) {
      std::string s;
      for (size_t i = 0; i < names.size(); ++i) s += (i ? " " : "") + names[i];
      return s;
    };
    out += "parts: {" + join(report.split->first) + "} {" + join(report.split->second) + "}\n";
  }
  if (report.certificate) {
    out += "witness:";
    for (const auto& letter : report.certificate->witness)
      out += " " + letter.gen + (letter.exp == 1 ? "" : "^-1");
    out += "\n";
    out += "assertions verified: " + std::to_string(report.certificate->assertions.size()) + "\n";
  }
  for (const auto& [name, value] : report.flags)
    out += name + ": " + (value ? "true" : "false") + "\n";
  return out;
}

}  // namespace atlink
