#include "atlink/certificate.hpp"

#include <algorithm>

#include "json.hpp"

namespace atlink {

LinkPointSpec LinkPointSpec::vertex(std::string gen, int sign) {
  LinkPointSpec p;
  p.is_vertex = true;
  p.gen = std::move(gen);
  p.sign = sign;
  return p;
}

LinkPointSpec LinkPointSpec::interior(int relation, Corner corner, int offset) {
  LinkPointSpec p;
  p.is_vertex = false;
  p.relation = relation;
  p.corner = corner;
  p.offset = offset;
  return p;
}

namespace {

const char* corner_name(Corner c) {
  switch (c) {
    case Corner::Start: return "start";
    case Corner::End: return "end";
    case Corner::Middle: return "middle";
  }
  return "";
}

Corner corner_from_name(const std::string& name) {
  if (name == "start") return Corner::Start;
  if (name == "end") return Corner::End;
  if (name == "middle") return Corner::Middle;
  throw CertificateError("unknown corner \"" + name + "\"");
}

}  // namespace

std::string LinkPointSpec::describe() const {
  if (is_vertex) return gen + (sign > 0 ? "+" : "-");
  return std::string("interior(relation ") + std::to_string(relation) + ", " +
         corner_name(corner) + ", offset " + std::to_string(offset) + ")";
}

std::string CertAssertion::describe() const {
  switch (kind) {
    case Kind::DistanceAtLeast:
      return "distance_at_least(" + p.describe() + ", " + q.describe() + ", " +
             std::to_string(bound) + ")";
    case Kind::DistanceEquals:
      return "distance_equals(" + p.describe() + ", " + q.describe() + ", " +
             std::to_string(bound) + ")";
    case Kind::UniqueGeodesic:
      return "unique_geodesic(" + p.describe() + ", " + q.describe() + ")";
    case Kind::NoPiPathThrough:
      return "no_pi_path_through(" + p.describe() + ", " + mid.describe() + ", " +
             q.describe() + ")";
  }
  return "";
}

namespace {

LinkPoint resolve(const LinkPointSpec& spec, const LinkGraph& link) {
  if (spec.is_vertex) {
    const int v = link.vertex_of(spec.gen, spec.sign);
    if (v < 0)
      throw CertificateError("link has no vertex " + spec.describe());
    return LinkPoint::at_vertex(v);
  }
  if (spec.relation < 0 || spec.relation >= link.relation_count())
    throw CertificateError("link has no relation " + std::to_string(spec.relation));
  const int edge = link.edge_id(spec.relation, spec.corner);
  if (spec.offset <= 0 || spec.offset >= link.edges[edge].weight)
    throw CertificateError("offset out of range in " + spec.describe());
  return LinkPoint::interior(edge, spec.offset);
}

bool assertion_holds(const CertAssertion& a, const LinkGraph& link) {
  const LinkPoint p = resolve(a.p, link);
  const LinkPoint q = resolve(a.q, link);
  switch (a.kind) {
    case CertAssertion::Kind::DistanceAtLeast: {
      const auto d = link_distance(link, p, q);
      return !d || *d >= a.bound;
    }
    case CertAssertion::Kind::DistanceEquals: {
      const auto d = link_distance(link, p, q);
      return d && *d == a.bound;
    }
    case CertAssertion::Kind::UniqueGeodesic: {
      const auto paths = geodesics_between(link, p, q);
      if (paths.size() != 1) return false;
      std::vector<int> expected;
      for (const auto& spec : a.path) {
        const LinkPoint pt = resolve(spec, link);
        if (!pt.is_vertex()) return false;
        expected.push_back(pt.vertex);
      }
      return paths.front().vertices == expected;
    }
    case CertAssertion::Kind::NoPiPathThrough: {
      const LinkPoint mid = resolve(a.mid, link);
      const auto d1 = link_distance(link, p, mid);
      const auto d2 = link_distance(link, mid, q);
      if (!d1 || !d2) return true;  // no path through mid at all
      return *d1 + *d2 >= kStraightAngle + 1;
    }
  }
  return false;
}

}  // namespace

VerifyResult verify_certificate(const RankOneCertificate& cert, const LinkGraph& link) {
  if (cert.metric != link.metric)
    throw CertificateError("certificate metric does not match the link");
  VerifyResult result;
  for (const auto& a : cert.assertions)
    if (!assertion_holds(a, link)) {
      result.ok = false;
      result.failures.push_back(a.describe());
    }
  return result;
}

VerifyResult verify_certificate(const RankOneCertificate& cert) {
  return verify_certificate(cert, build_link(cert.graph, cert.metric));
}

namespace {

// Shared tail of every constructor: evaluate the assertions right away and
// refuse to issue a failing certificate.
RankOneCertificate issue(RankOneCertificate cert) {
  const auto result = verify_certificate(cert);
  if (!result.ok)
    throw CertificateError("assertion failed: " + result.failures.front());
  return cert;
}

void require_direction(const DirectedLabeledGraph& dg, int from, int to) {
  const int e = dg.base().edge_index(from, to);
  if (!dg.directed_from(e, from, to))
    throw CertificateError("direction mismatch: edge " + dg.base().edge_key(e) +
                           " must run " + dg.base().name(from) + " -> " +
                           dg.base().name(to));
}

}  // namespace

RankOneCertificate certify_two_path(const LabeledGraph& g, const SubgraphWitness& w,
                                    const DirectedLabeledGraph& dg) {
  if (w.kind != SubgraphWitness::Kind::TwoPathBigLabel || !witness_holds(g, w))
    throw CertificateError("witness is not a full 2-path with big second label");
  const int v1 = w.vertices[0], v2 = w.vertices[1], v3 = w.vertices[2];
  require_direction(dg, v1, v2);
  require_direction(dg, v2, v3);

  const auto tp = triangular_presentation(dg);
  const int e1 = g.edge_index(v1, v2), e2 = g.edge_index(v2, v3);
  const int n = g.edge(e2).label;
  const auto& gens = tp.pres.generators;
  const std::string x1 = gens[tp.x_of_edge[e1]];
  const std::string x2 = gens[tp.x_of_edge[e2]];
  const std::string tip = gens[tp.alpha_index(e2, n)];
  const std::string n1 = g.name(v1), n2 = g.name(v2), n3 = g.name(v3);

  RankOneCertificate cert;
  cert.construction = "two_path";
  cert.metric = LinkMetric::Isosceles;
  cert.graph = dg;
  cert.embedding = {n1, n2, n3};
  cert.witness = {{tip, 1}, {n3, 1}, {n1, 1}};
  cert.witness_standard = expand_to_standard(cert.witness, dg);

  auto vx = LinkPointSpec::vertex;
  CertAssertion a;
  a.kind = CertAssertion::Kind::DistanceAtLeast;
  a.bound = kStraightAngle;
  a.p = vx(n1, +1);
  a.q = vx(tip, -1);
  cert.assertions.push_back(a);
  a.p = vx(tip, +1);
  a.q = vx(n3, -1);
  cert.assertions.push_back(a);
  a.p = vx(n3, +1);
  a.q = vx(n1, -1);
  cert.assertions.push_back(a);

  a.kind = CertAssertion::Kind::DistanceEquals;
  a.p = vx(n1, +1);
  a.q = vx(tip, -1);
  cert.assertions.push_back(a);

  CertAssertion u;
  u.kind = CertAssertion::Kind::UniqueGeodesic;
  u.p = vx(n1, +1);
  u.q = vx(tip, -1);
  u.path = {vx(n1, +1), vx(n2, -1), vx(x2, -1), vx(tip, -1)};
  cert.assertions.push_back(u);

  a.kind = CertAssertion::Kind::DistanceEquals;
  a.p = vx(tip, +1);
  a.q = vx(n3, -1);
  cert.assertions.push_back(a);

  CertAssertion f;
  f.kind = CertAssertion::Kind::NoPiPathThrough;
  f.p = vx(n1, -1);
  f.mid = vx(x1, -1);
  f.q = vx(n3, +1);
  cert.assertions.push_back(f);

  return issue(std::move(cert));
}

RankOneCertificate certify_three_path(const LabeledGraph& g, const SubgraphWitness& w,
                                      const DirectedLabeledGraph& dg) {
  if (w.kind != SubgraphWitness::Kind::ThreePathAll2 || !witness_holds(g, w))
    throw CertificateError("witness is not a full 3-path with all labels 2");
  const int v1 = w.vertices[0], v2 = w.vertices[1], v3 = w.vertices[2], v4 = w.vertices[3];
  require_direction(dg, v1, v2);
  require_direction(dg, v2, v3);
  require_direction(dg, v3, v4);

  const auto tp = triangular_presentation(dg);
  const auto& gens = tp.pres.generators;
  const std::string x1 = gens[tp.x_of_edge[g.edge_index(v1, v2)]];
  const std::string x3 = gens[tp.x_of_edge[g.edge_index(v3, v4)]];
  const std::string n1 = g.name(v1), n2 = g.name(v2), n3 = g.name(v3), n4 = g.name(v4);

  RankOneCertificate cert;
  cert.construction = "three_path";
  cert.metric = LinkMetric::Isosceles;
  cert.graph = dg;
  cert.embedding = {n1, n2, n3, n4};
  cert.witness = {{x1, 1}, {x3, 1}};
  cert.witness_standard = expand_to_standard(cert.witness, dg);

  auto vx = LinkPointSpec::vertex;
  CertAssertion a;
  a.kind = CertAssertion::Kind::DistanceEquals;
  a.bound = kStraightAngle;
  a.p = vx(x3, +1);
  a.q = vx(x1, -1);
  cert.assertions.push_back(a);

  CertAssertion u;
  u.kind = CertAssertion::Kind::UniqueGeodesic;
  u.p = vx(x3, +1);
  u.q = vx(x1, -1);
  u.path = {vx(x3, +1), vx(n3, +1), vx(n2, -1), vx(x1, -1)};
  cert.assertions.push_back(u);

  a.p = vx(x1, +1);
  a.q = vx(x3, -1);
  cert.assertions.push_back(a);

  CertAssertion f;
  f.kind = CertAssertion::Kind::NoPiPathThrough;
  f.p = vx(x1, +1);
  f.mid = vx(n1, +1);
  f.q = vx(x3, -1);
  cert.assertions.push_back(f);

  return issue(std::move(cert));
}

RankOneCertificate certify_triangle(const LabeledGraph& g, const DirectedLabeledGraph& dg,
                               const SubgraphWitness& triangle) {
  if (triangle.kind != SubgraphWitness::Kind::Triangle || !witness_holds(g, triangle))
    throw CertificateError("witness is not a 3-cycle");
  if (!validate_orientation(dg).valid)
    throw PreconditionError("orientation does not validate");

  // The 3-cycle is directed; walk it from its canonical-least vertex.
  const int least = *std::min_element(triangle.vertices.begin(), triangle.vertices.end());
  int v1 = least, v2 = -1, v3 = -1;
  for (int cand : triangle.vertices) {
    if (cand == v1) continue;
    if (dg.directed_from(g.edge_index(v1, cand), v1, cand))
      v2 = cand;
    else
      v3 = cand;
  }
  if (v2 < 0 || v3 < 0 || !dg.directed_from(g.edge_index(v2, v3), v2, v3))
    throw CertificateError("3-cycle is not directed cyclically");

  const auto tp = triangular_presentation(dg);
  const int e1 = g.edge_index(v1, v2), e2 = g.edge_index(v2, v3);
  const int n = g.edge(e2).label;
  const auto& gens = tp.pres.generators;

  RankOneCertificate cert;
  cert.construction = "triangle";
  cert.metric = LinkMetric::Equilateral;
  cert.graph = dg;
  cert.embedding = {g.name(v1), g.name(v2), g.name(v3)};
  cert.witness = {{gens[tp.x_of_edge[e2]], 1}, {gens[tp.alpha_index(e1, 3)], 1}};
  cert.witness_standard = expand_to_standard(cert.witness, dg);

  // The witness axis leaves through the start corner of x[e2] = alpha[e2][n] v2
  // and arrives through the end corner of x[e1] = v2 alpha[e1][3], crossing
  // each corner edge at its midpoint.
  const int rel_out = tp.first_relation_of_edge[e2] + n - 1;
  const int rel_in = tp.first_relation_of_edge[e1] + 1;
  const auto l_minus = LinkPointSpec::interior(rel_out, Corner::Start, 2);
  const auto l_plus = LinkPointSpec::interior(rel_in, Corner::End, 2);

  CertAssertion main;
  main.kind = CertAssertion::Kind::DistanceAtLeast;
  main.p = l_plus;
  main.q = l_minus;
  main.bound = kStraightAngle + 1;
  cert.assertions.push_back(main);

  for (const auto& l : {l_plus, l_minus})
    for (int v : {v1, v2, v3})
      for (int sign : {-1, +1}) {
        CertAssertion a;
        a.kind = CertAssertion::Kind::DistanceAtLeast;
        a.p = l;
        a.q = LinkPointSpec::vertex(g.name(v), sign);
        a.bound = 5;  // exceeds one third of pi (4 units)
        cert.assertions.push_back(a);
      }

  return issue(std::move(cert));
}

namespace {

using ojson = nlohmann::ordered_json;

ojson point_to_json(const LinkPointSpec& p) {
  ojson out;
  if (p.is_vertex) {
    out["kind"] = "vertex";
    out["gen"] = p.gen;
    out["sign"] = p.sign > 0 ? "+" : "-";
  } else {
    out["kind"] = "interior";
    out["relation"] = p.relation;
    out["corner"] = corner_name(p.corner);
    out["offset"] = p.offset;
  }
  return out;
}

LinkPointSpec point_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw CertificateError("malformed link point");
  if (j["kind"] == "vertex")
    return LinkPointSpec::vertex(j.at("gen").get<std::string>(),
                                 j.at("sign").get<std::string>() == "+" ? +1 : -1);
  if (j["kind"] == "interior")
    return LinkPointSpec::interior(j.at("relation").get<int>(),
                                   corner_from_name(j.at("corner").get<std::string>()),
                                   j.at("offset").get<int>());
  throw CertificateError("malformed link point");
}

ojson word_to_json(const Word& w) {
  ojson out = ojson::array();
  for (const auto& letter : w) {
    ojson l;
    l["gen"] = letter.gen;
    l["exp"] = letter.exp;
    out.push_back(l);
  }
  return out;
}

Word word_from_json(const nlohmann::json& j) {
  Word w;
  for (const auto& l : j) w.push_back({l.at("gen").get<std::string>(), l.at("exp").get<int>()});
  return w;
}

}  // namespace

std::string serialize_certificate(const RankOneCertificate& cert) {
  ojson out;
  out["construction"] = cert.construction;
  out["metric"] = cert.metric == LinkMetric::Isosceles ? "isosceles" : "equilateral";
  out["graph"] = nlohmann::json::parse(serialize_graph(cert.graph));
  out["embedding"] = cert.embedding;
  out["witness"] = word_to_json(cert.witness);
  out["witness_standard"] = word_to_json(cert.witness_standard);
  ojson assertions = ojson::array();
  for (const auto& a : cert.assertions) {
    ojson ja;
    switch (a.kind) {
      case CertAssertion::Kind::DistanceAtLeast:
        ja["type"] = "distance_at_least";
        ja["p"] = point_to_json(a.p);
        ja["q"] = point_to_json(a.q);
        ja["bound"] = a.bound;
        break;
      case CertAssertion::Kind::DistanceEquals:
        ja["type"] = "distance_equals";
        ja["p"] = point_to_json(a.p);
        ja["q"] = point_to_json(a.q);
        ja["value"] = a.bound;
        break;
      case CertAssertion::Kind::UniqueGeodesic: {
        ja["type"] = "unique_geodesic";
        ja["p"] = point_to_json(a.p);
        ja["q"] = point_to_json(a.q);
        ojson path = ojson::array();
        for (const auto& pt : a.path) path.push_back(point_to_json(pt));
        ja["path"] = path;
        break;
      }
      case CertAssertion::Kind::NoPiPathThrough:
        ja["type"] = "no_pi_path_through";
        ja["p"] = point_to_json(a.p);
        ja["mid"] = point_to_json(a.mid);
        ja["q"] = point_to_json(a.q);
        break;
    }
    assertions.push_back(ja);
  }
  out["assertions"] = assertions;
  return out.dump(2) + "\n";
}

RankOneCertificate parse_certificate(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw CertificateError(std::string("invalid certificate JSON: ") + ex.what());
  }
  RankOneCertificate cert;
  try {
    cert.construction = doc.at("construction").get<std::string>();
    const std::string metric = doc.at("metric").get<std::string>();
    if (metric == "isosceles")
      cert.metric = LinkMetric::Isosceles;
    else if (metric == "equilateral")
      cert.metric = LinkMetric::Equilateral;
    else
      throw CertificateError("unknown metric \"" + metric + "\"");
    const auto parsed = parse_graph(doc.at("graph").dump());
    if (!parsed.directed)
      throw CertificateError("certificate graph must be directed");
    cert.graph = *parsed.directed;
    cert.embedding = doc.at("embedding").get<std::vector<std::string>>();
    cert.witness = word_from_json(doc.at("witness"));
    cert.witness_standard = word_from_json(doc.at("witness_standard"));
    for (const auto& ja : doc.at("assertions")) {
      CertAssertion a;
      const std::string type = ja.at("type").get<std::string>();
      a.p = point_from_json(ja.at("p"));
      a.q = point_from_json(ja.at("q"));
      if (type == "distance_at_least") {
        a.kind = CertAssertion::Kind::DistanceAtLeast;
        a.bound = ja.at("bound").get<int>();
      } else if (type == "distance_equals") {
        a.kind = CertAssertion::Kind::DistanceEquals;
        a.bound = ja.at("value").get<int>();
      } else if (type == "unique_geodesic") {
        a.kind = CertAssertion::Kind::UniqueGeodesic;
        for (const auto& pt : ja.at("path")) a.path.push_back(point_from_json(pt));
      } else if (type == "no_pi_path_through") {
        a.kind = CertAssertion::Kind::NoPiPathThrough;
        a.mid = point_from_json(ja.at("mid"));
      } else {
        throw CertificateError("unknown assertion type \"" + type + "\"");
      }
      cert.assertions.push_back(std::move(a));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw CertificateError(std::string("malformed certificate: ") + ex.what());
  }
  return cert;
}

}  // namespace atlink
