#include "atlink/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "json.hpp"

namespace atlink {

LabeledGraph LabeledGraph::make(std::vector<std::string> vertices,
                                const std::vector<EdgeSpec>& edges) {
  LabeledGraph g;
  std::unordered_map<std::string, int> index;
  for (const auto& name : vertices) {
    if (name.empty()) throw ParseError("empty vertex name");
    if (!index.emplace(name, static_cast<int>(g.names_.size())).second)
      throw ParseError("duplicate vertex \"" + name + "\"");
    g.names_.push_back(name);
  }
  const int n = g.vertex_count();
  g.label_matrix_.assign(static_cast<size_t>(n) * n, 0);
  g.edge_matrix_.assign(static_cast<size_t>(n) * n, -1);
  g.adj_.assign(n, {});

  for (const auto& e : edges) {
    auto it_u = index.find(e.u);
    if (it_u == index.end())
      throw ParseError("unknown endpoint \"" + e.u + "\" on edge " + e.u + "--" + e.v);
    auto it_v = index.find(e.v);
    if (it_v == index.end())
      throw ParseError("unknown endpoint \"" + e.v + "\" on edge " + e.u + "--" + e.v);
    int u = it_u->second, v = it_v->second;
    if (u == v) throw ParseError("self-loop at \"" + e.u + "\"");
    if (u > v) std::swap(u, v);
    const std::string key = g.names_[u] + "--" + g.names_[v];
    if (g.label_matrix_[static_cast<size_t>(u) * n + v] != 0)
      throw ParseError("duplicate edge " + key);
    if (e.label < 2)
      throw ParseError("label below 2 on edge " + key);
    g.label_matrix_[static_cast<size_t>(u) * n + v] = e.label;
    g.label_matrix_[static_cast<size_t>(v) * n + u] = e.label;
    g.edges_.push_back({u, v, e.label});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges_[e];
    g.edge_matrix_[static_cast<size_t>(ed.u) * n + ed.v] = e;
    g.edge_matrix_[static_cast<size_t>(ed.v) * n + ed.u] = e;
    g.adj_[ed.u].push_back(ed.v);
    g.adj_[ed.v].push_back(ed.u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

LabeledGraph LabeledGraph::make_indexed(int n, const std::vector<GraphEdge>& edges) {
  LabeledGraph g;
  g.names_.reserve(n);
  for (int i = 1; i <= n; ++i) g.names_.push_back("v" + std::to_string(i));
  g.label_matrix_.assign(static_cast<size_t>(n) * n, 0);
  g.edge_matrix_.assign(static_cast<size_t>(n) * n, -1);
  g.adj_.assign(n, {});
  g.edges_ = edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges_[e];
    if (ed.u < 0 || ed.v >= n || ed.u >= ed.v || ed.label < 2)
      throw ParseError("make_indexed: malformed edge");
    g.label_matrix_[static_cast<size_t>(ed.u) * n + ed.v] = ed.label;
    g.label_matrix_[static_cast<size_t>(ed.v) * n + ed.u] = ed.label;
    g.edge_matrix_[static_cast<size_t>(ed.u) * n + ed.v] = e;
    g.edge_matrix_[static_cast<size_t>(ed.v) * n + ed.u] = e;
    g.adj_[ed.u].push_back(ed.v);
    g.adj_[ed.v].push_back(ed.u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

int LabeledGraph::vertex_index(const std::string& name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (names_[i] == name) return i;
  throw ParseError("unknown vertex \"" + name + "\"");
}

int LabeledGraph::label_at(int u, int v) const {
  if (u == v) return 0;
  return label_matrix_[static_cast<size_t>(u) * vertex_count() + v];
}

int LabeledGraph::edge_index(int u, int v) const {
  if (u == v) return -1;
  return edge_matrix_[static_cast<size_t>(u) * vertex_count() + v];
}

std::string LabeledGraph::edge_key(int e) const {
  return names_[edges_[e].u] + "--" + names_[edges_[e].v];
}

DirectedLabeledGraph::DirectedLabeledGraph(LabeledGraph base, std::vector<bool> forward)
    : base_(std::move(base)), forward_(std::move(forward)) {
  if (static_cast<int>(forward_.size()) != base_.edge_count())
    throw PreconditionError("orientation size does not match edge count");
}

bool DirectedLabeledGraph::directed_from(int e, int a, int b) const {
  return source(e) == a && target(e) == b;
}

DirectedLabeledGraph direct_lexicographically(const LabeledGraph& g) {
  return DirectedLabeledGraph(g, std::vector<bool>(g.edge_count(), true));
}

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

ojson graph_to_json(const LabeledGraph& g, const DirectedLabeledGraph* dg) {
  ojson out;
  out["vertices"] = g.vertex_names();
  ojson edges = ojson::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    ojson je;
    if (dg != nullptr) {
      je["source"] = g.name(dg->source(e));
      je["target"] = g.name(dg->target(e));
      je["label"] = g.edge(e).label;
      je["directed"] = true;
    } else {
      je["source"] = g.name(g.edge(e).u);
      je["target"] = g.name(g.edge(e).v);
      je["label"] = g.edge(e).label;
    }
    edges.push_back(je);
  }
  out["edges"] = edges;
  return out;
}

}  // namespace

ParsedGraph parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("missing \"vertices\" array");
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<EdgeSpec> edges;
  bool all_directed = true;
  std::vector<std::pair<std::string, std::string>> directed_pairs;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& je : doc["edges"]) {
      if (!je.is_object()) throw ParseError("edges must be objects");
      for (const char* field : {"source", "target"})
        if (!je.contains(field) || !je[field].is_string())
          throw ParseError(std::string("edge missing string \"") + field + "\"");
      if (!je.contains("label") || !je["label"].is_number_integer())
        throw ParseError("edge " + je["source"].get<std::string>() + "--" +
                         je["target"].get<std::string>() + " needs an integer label");
      EdgeSpec spec{je["source"].get<std::string>(), je["target"].get<std::string>(),
                    je["label"].get<int>()};
      if (je.contains("directed") && je["directed"].is_boolean() && je["directed"].get<bool>())
        directed_pairs.emplace_back(spec.u, spec.v);
      else
        all_directed = false;
      edges.push_back(std::move(spec));
    }
  }
  if (!directed_pairs.empty() && !all_directed)
    throw ParseError("either every edge is directed or none");
  ParsedGraph out;
  out.graph = LabeledGraph::make(std::move(vertices), edges);
  if (all_directed) {
    std::vector<bool> forward(out.graph.edge_count(), true);
    for (const auto& [s, t] : directed_pairs) {
      int si = out.graph.vertex_index(s), ti = out.graph.vertex_index(t);
      forward[out.graph.edge_index(si, ti)] = si < ti;
    }
    out.directed = DirectedLabeledGraph(out.graph, std::move(forward));
  }
  return out;
}

std::string serialize_graph(const LabeledGraph& g) {
  return graph_to_json(g, nullptr).dump(2) + "\n";
}

std::string serialize_graph(const DirectedLabeledGraph& dg) {
  return graph_to_json(dg.base(), &dg).dump(2) + "\n";
}

bool witness_holds(const LabeledGraph& g, const SubgraphWitness& w) {
  const auto& vs = w.vertices;
  std::set<int> distinct(vs.begin(), vs.end());
  if (distinct.size() != vs.size()) return false;
  for (int v : vs)
    if (v < 0 || v >= g.vertex_count()) return false;
  auto lab = [&](size_t i, size_t j) { return g.label_at(vs[i], vs[j]); };
  switch (w.kind) {
    case SubgraphWitness::Kind::TwoPathBigLabel:
      if (vs.size() != 3 || w.labels.size() != 2) return false;
      if (lab(0, 1) != w.labels[0] || lab(1, 2) != w.labels[1]) return false;
      if (lab(0, 1) == 0 || lab(1, 2) == 0 || lab(0, 2) != 0) return false;
      return w.labels[1] >= 3 && (w.labels[0] <= 2 || w.labels[0] <= w.labels[1]);
    case SubgraphWitness::Kind::ThreePathAll2:
      if (vs.size() != 4 || w.labels.size() != 3) return false;
      for (size_t i = 0; i < 3; ++i)
        if (lab(i, i + 1) != 2 || w.labels[i] != 2) return false;
      return lab(0, 2) == 0 && lab(1, 3) == 0 && lab(0, 3) == 0;
    case SubgraphWitness::Kind::Triangle:
      if (vs.size() != 3 || w.labels.size() != 3) return false;
      return lab(0, 1) == w.labels[0] && lab(1, 2) == w.labels[1] &&
             lab(2, 0) == w.labels[2] && lab(0, 1) != 0 && lab(1, 2) != 0 && lab(2, 0) != 0;
  }
  return false;
}

bool is_triangle_free(const LabeledGraph& g) {
  for (const auto& e : g.edges())
    for (int w : g.neighbors(e.u))
      if (w != e.v && g.adjacent(w, e.v)) return false;
  return true;
}

std::vector<std::array<int, 3>> all_triangles(const LabeledGraph& g) {
  std::vector<std::array<int, 3>> out;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, c) && g.adjacent(b, c)) out.push_back({a, b, c});
    }
  return out;
}

std::vector<std::array<int, 4>> all_four_cycles(const LabeledGraph& g) {
  std::vector<std::array<int, 4>> out;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b || !g.adjacent(b, c)) continue;
        // a least on the cycle, b < d breaks the reflection.
        if (c < a) continue;
        for (int d = b + 1; d < n; ++d) {
          if (d == a || d == c) continue;
          if (d < a) continue;
          if (g.adjacent(c, d) && g.adjacent(d, a)) out.push_back({a, b, c, d});
        }
      }
    }
  return out;
}

bool is_almost_large_type(const LabeledGraph& g) {
  for (const auto& t : all_triangles(g)) {
    if (g.label_at(t[0], t[1]) <= 2 || g.label_at(t[1], t[2]) <= 2 ||
        g.label_at(t[0], t[2]) <= 2)
      return false;
  }
  for (const auto& q : all_four_cycles(g)) {
    int big = 0;
    for (int i = 0; i < 4; ++i)
      if (g.label_at(q[i], q[(i + 1) % 4]) > 2) ++big;
    if (big < 2) return false;
  }
  return true;
}

bool is_square_free(const LabeledGraph& g) { return all_four_cycles(g).empty(); }

std::optional<std::vector<int>> bipartite_coloring(const LabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<int> queue{start};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::vector<std::vector<int>> connected_components(const LabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    comp[start] = count;
    std::vector<int> queue{start};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int w : g.neighbors(v))
        if (comp[w] == -1) {
          comp[w] = count;
          queue.push_back(w);
        }
    }
    ++count;
  }
  std::vector<std::vector<int>> out(count);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

namespace {

// Components of the relation "u,v cannot sit on opposite sides of a join":
// u--v missing, or present with a label other than 2.
std::vector<std::vector<int>> non_join_components(const LabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    comp[start] = count;
    std::vector<int> queue{start};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int w = 0; w < n; ++w) {
        if (w == v || comp[w] != -1) continue;
        if (g.label_at(v, w) != 2) {
          comp[w] = count;
          queue.push_back(w);
        }
      }
    }
    ++count;
  }
  std::vector<std::vector<int>> out(count);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

}  // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>> join_decompose(
    const LabeledGraph& g) {
  const auto comps = non_join_components(g);
  const int k = static_cast<int>(comps.size());
  if (k < 2 || g.vertex_count() < 2) return std::nullopt;
  // Any union of components that contains vertex 0 (and not everything) is a
  // valid first part; pick the lexicographically least vertex sequence.
  std::vector<int> best;
  for (unsigned mask = 1; mask < (1u << k) - 1; ++mask) {
    if (!(mask & 1u)) continue;  // part must contain component of vertex 0
    std::vector<int> part;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) part.insert(part.end(), comps[i].begin(), comps[i].end());
    std::sort(part.begin(), part.end());
    if (best.empty() || part < best) best = std::move(part);
  }
  std::vector<int> rest;
  std::vector<bool> in_best(g.vertex_count(), false);
  for (int v : best) in_best[v] = true;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!in_best[v]) rest.push_back(v);
  return std::pair(std::move(best), std::move(rest));
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
complete_bipartite_all2_parts(const LabeledGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  auto coloring = bipartite_coloring(g);
  if (!coloring) return std::nullopt;
  if (connected_components(g).size() != 1) return std::nullopt;
  std::vector<int> a, b;
  for (int v = 0; v < n; ++v) ((*coloring)[v] == 0 ? a : b).push_back(v);
  if (a.empty() || b.empty()) return std::nullopt;
  for (int u : a)
    for (int v : b)
      if (g.label_at(u, v) != 2) return std::nullopt;
  return std::pair(std::move(a), std::move(b));
}

std::optional<int> cone_over_isolated_all2_apex(const LabeledGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  for (int apex = 0; apex < n; ++apex) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (v == apex) continue;
      if (g.label_at(apex, v) != 2) ok = false;
      for (int w = v + 1; w < n && ok; ++w)
        if (w != apex && g.adjacent(v, w)) ok = false;
    }
    if (ok) return apex;
  }
  return std::nullopt;
}

std::optional<SubgraphWitness> find_full_2path_big_label(const LabeledGraph& g) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (b == a || !g.adjacent(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (!g.adjacent(b, c) || g.adjacent(a, c)) continue;
        const int m = g.label_at(a, b), big = g.label_at(b, c);
        if (big < 3) continue;
        if (m > 2 && m > big) continue;
        SubgraphWitness w;
        w.kind = SubgraphWitness::Kind::TwoPathBigLabel;
        w.vertices = {a, b, c};
        w.labels = {m, big};
        return w;
      }
    }
  return std::nullopt;
}

std::optional<SubgraphWitness> find_full_3path_all2(const LabeledGraph& g) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (b == a || g.label_at(a, b) != 2) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (g.label_at(b, c) != 2 || g.adjacent(a, c)) continue;
        for (int d = 0; d < n; ++d) {
          if (d == a || d == b || d == c) continue;
          if (g.label_at(c, d) != 2 || g.adjacent(a, d) || g.adjacent(b, d)) continue;
          SubgraphWitness w;
          w.kind = SubgraphWitness::Kind::ThreePathAll2;
          w.vertices = {a, b, c, d};
          w.labels = {2, 2, 2};
          return w;
        }
      }
    }
  return std::nullopt;
}

std::optional<SubgraphWitness> find_triangle(const LabeledGraph& g) {
  auto triangles = all_triangles(g);
  if (triangles.empty()) return std::nullopt;
  const auto& t = triangles.front();
  SubgraphWitness w;
  w.kind = SubgraphWitness::Kind::Triangle;
  w.vertices = {t[0], t[1], t[2]};
  w.labels = {g.label_at(t[0], t[1]), g.label_at(t[1], t[2]), g.label_at(t[2], t[0])};
  return w;
}

}  // namespace atlink
