#include "atlink/link.hpp"

#include <algorithm>
#include <queue>

#include "json.hpp"

namespace atlink {

int LinkGraph::vertex_of(const std::string& gen, int sign) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].sign == sign && vertices[i].gen == gen) return static_cast<int>(i);
  return -1;
}

LinkGraph build_link(const DirectedLabeledGraph& dg, LinkMetric metric) {
  const auto tp = triangular_presentation(dg);
  LinkGraph link;
  link.metric = metric;
  for (const auto& gen : tp.pres.generators) {
    link.vertices.push_back({gen, -1});
    link.vertices.push_back({gen, +1});
  }
  auto minus = [](int gen) { return 2 * gen; };
  auto plus = [](int gen) { return 2 * gen + 1; };
  const bool iso = metric == LinkMetric::Isosceles;
  const int corner_weight[3] = {iso ? 3 : 4, iso ? 3 : 4, iso ? 6 : 4};
  for (size_t k = 0; k < tp.relations.size(); ++k) {
    const auto& tri = tp.relations[k];
    const int rel = static_cast<int>(k);
    link.edges.push_back({minus(tri.x), minus(tri.a), corner_weight[0], rel, Corner::Start});
    link.edges.push_back({plus(tri.x), plus(tri.b), corner_weight[1], rel, Corner::End});
    link.edges.push_back({plus(tri.a), minus(tri.b), corner_weight[2], rel, Corner::Middle});
  }
  return link;
}

namespace {

constexpr int kUnreachable = -1;

// Working multigraph for searches; interior endpoints become real vertices by
// splitting their edge (other parallel edges are unaffected).
struct SearchGraph {
  struct Arc {
    int to;
    int weight;
    int original_edge;  // id in the LinkGraph
  };
  std::vector<std::vector<Arc>> adjacency;
  int p_node = -1;
  int q_node = -1;

  explicit SearchGraph(const LinkGraph& link, int skip_edge = -1) {
    adjacency.resize(link.vertices.size());
    for (size_t e = 0; e < link.edges.size(); ++e) {
      if (static_cast<int>(e) == skip_edge) continue;
      add(link.edges[e].a, link.edges[e].b, link.edges[e].weight, static_cast<int>(e));
    }
  }

  void add(int a, int b, int w, int original) {
    adjacency[a].push_back({b, w, original});
    adjacency[b].push_back({a, w, original});
  }

  int add_node() {
    adjacency.emplace_back();
    return static_cast<int>(adjacency.size()) - 1;
  }

  void remove_full_edge(int original) {
    for (auto& arcs : adjacency)
      arcs.erase(std::remove_if(arcs.begin(), arcs.end(),
                                [original](const Arc& a) { return a.original_edge == original; }),
                 arcs.end());
  }

  // Splices an interior point in as a new node.  Both half-arcs keep the
  // original edge id.
  int splice(const LinkGraph& link, const LinkPoint& pt) {
    const auto& e = link.edges[pt.edge];
    if (pt.offset <= 0 || pt.offset >= e.weight)
      throw PreconditionError("interior offset out of range");
    remove_full_edge(pt.edge);
    const int node = add_node();
    add(e.a, node, pt.offset, pt.edge);
    add(node, e.b, e.weight - pt.offset, pt.edge);
    return node;
  }

  // Places p and q, splitting shared edges consistently.
  void place(const LinkGraph& link, const LinkPoint& p, const LinkPoint& q) {
    if (p.is_vertex()) {
      p_node = p.vertex;
    }
    if (q.is_vertex()) {
      q_node = q.vertex;
    }
    if (!p.is_vertex() && !q.is_vertex() && p.edge == q.edge) {
      // Both interior on one edge: split it twice, in offset order.
      const auto& e = link.edges[p.edge];
      const LinkPoint& lo = p.offset <= q.offset ? p : q;
      const LinkPoint& hi = p.offset <= q.offset ? q : p;
      remove_full_edge(p.edge);
      const int lo_node = add_node();
      const int hi_node = add_node();
      add(e.a, lo_node, lo.offset, p.edge);
      add(lo_node, hi_node, hi.offset - lo.offset, p.edge);
      add(hi_node, e.b, e.weight - hi.offset, p.edge);
      p_node = (p.offset <= q.offset) ? lo_node : hi_node;
      q_node = (p.offset <= q.offset) ? hi_node : lo_node;
      return;
    }
    if (!p.is_vertex()) p_node = splice(link, p);
    if (!q.is_vertex()) q_node = splice(link, q);
  }
};

std::vector<int> dijkstra(const SearchGraph& g, int source) {
  std::vector<int> dist(g.adjacency.size(), kUnreachable);
  using Item = std::pair<int, int>;  // (distance, node)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0;
  heap.push({0, source});
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d != dist[v]) continue;
    for (const auto& arc : g.adjacency[v]) {
      const int nd = d + arc.weight;
      if (dist[arc.to] == kUnreachable || nd < dist[arc.to]) {
        dist[arc.to] = nd;
        heap.push({nd, arc.to});
      }
    }
  }
  return dist;
}

void check_point(const LinkGraph& link, const LinkPoint& pt) {
  if (pt.is_vertex()) {
    if (pt.vertex >= static_cast<int>(link.vertices.size()))
      throw PreconditionError("link point vertex out of range");
  } else {
    if (pt.edge < 0 || pt.edge >= static_cast<int>(link.edges.size()))
      throw PreconditionError("link point edge out of range");
    if (pt.offset <= 0 || pt.offset >= link.edges[pt.edge].weight)
      throw PreconditionError("interior offset out of range");
  }
}

}  // namespace

std::optional<int> link_distance(const LinkGraph& link, const LinkPoint& p,
                                 const LinkPoint& q) {
  check_point(link, p);
  check_point(link, q);
  if (p == q) return 0;
  SearchGraph g(link);
  g.place(link, p, q);
  const auto dist = dijkstra(g, g.p_node);
  if (dist[g.q_node] == kUnreachable) return std::nullopt;
  return dist[g.q_node];
}

std::vector<LinkPath> geodesics_between(const LinkGraph& link, const LinkPoint& p,
                                        const LinkPoint& q) {
  check_point(link, p);
  check_point(link, q);
  if (p == q) return {LinkPath{}};
  SearchGraph g(link);
  g.place(link, p, q);
  const auto dist = dijkstra(g, g.p_node);
  if (dist[g.q_node] == kUnreachable) return {};

  const int real_vertices = static_cast<int>(link.vertices.size());
  std::vector<LinkPath> out;
  LinkPath current;
  // Walk back from q along tight arcs, emitting paths in deterministic
  // (edge-id sorted) order once p is reached.
  auto extend = [&](auto&& self, int node) -> void {
    if (node == g.p_node) {
      // current was collected walking backward; real endpoints are already
      // included (q was seeded, p was pushed by the last arc).
      LinkPath path;
      for (auto it = current.vertices.rbegin(); it != current.vertices.rend(); ++it)
        path.vertices.push_back(*it);
      for (auto it = current.edges.rbegin(); it != current.edges.rend(); ++it)
        path.edges.push_back(*it);
      out.push_back(std::move(path));
      return;
    }
    std::vector<SearchGraph::Arc> tight;
    for (const auto& arc : g.adjacency[node])
      if (dist[arc.to] != kUnreachable && dist[arc.to] + arc.weight == dist[node])
        tight.push_back(arc);
    std::sort(tight.begin(), tight.end(), [](const auto& x, const auto& y) {
      return std::pair(x.original_edge, x.to) < std::pair(y.original_edge, y.to);
    });
    for (const auto& arc : tight) {
      current.edges.push_back(arc.original_edge);
      const bool real = arc.to < real_vertices;
      if (real) current.vertices.push_back(arc.to);
      self(self, arc.to);
      if (real) current.vertices.pop_back();
      current.edges.pop_back();
    }
  };
  if (q.is_vertex()) current.vertices.push_back(q.vertex);
  extend(extend, g.q_node);
  return out;
}

std::optional<int> systole(const LinkGraph& link) {
  std::optional<int> best;
  for (size_t e = 0; e < link.edges.size(); ++e) {
    SearchGraph g(link, static_cast<int>(e));
    const auto dist = dijkstra(g, link.edges[e].a);
    if (dist[link.edges[e].b] == kUnreachable) continue;
    const int cycle = dist[link.edges[e].b] + link.edges[e].weight;
    if (!best || cycle < *best) best = cycle;
  }
  return best;
}

bool check_link_condition(const LinkGraph& link) {
  const auto sys = systole(link);
  return !sys || *sys >= kFullTurn;
}

std::string serialize_link(const LinkGraph& link) {
  using ojson = nlohmann::ordered_json;
  ojson out;
  out["metric"] = link.metric == LinkMetric::Isosceles ? "isosceles" : "equilateral";
  out["vertices"] = ojson::array();
  for (const auto& v : link.vertices) {
    ojson jv;
    jv["gen"] = v.gen;
    jv["sign"] = v.sign > 0 ? "+" : "-";
    out["vertices"].push_back(jv);
  }
  out["edges"] = ojson::array();
  static const char* corner_names[3] = {"start", "end", "middle"};
  for (const auto& e : link.edges) {
    ojson je;
    je["a"] = e.a;
    je["b"] = e.b;
    je["w"] = e.weight;
    ojson origin;
    origin["relation"] = e.relation;
    origin["corner"] = corner_names[static_cast<int>(e.corner)];
    je["origin"] = origin;
    out["edges"].push_back(je);
  }
  return out.dump(2) + "\n";
}

}  // namespace atlink
