#include "atlink/oracles.hpp"

#include <algorithm>

namespace atlink::oracle {

std::vector<std::vector<std::optional<int>>> floyd_warshall_all_pairs(
    const LinkGraph& link) {
  const int n = static_cast<int>(link.vertices.size());
  std::vector<std::vector<std::optional<int>>> dist(
      n, std::vector<std::optional<int>>(n));
  for (int v = 0; v < n; ++v) dist[v][v] = 0;
  for (const auto& e : link.edges) {
    if (!dist[e.a][e.b] || *dist[e.a][e.b] > e.weight) {
      dist[e.a][e.b] = e.weight;
      dist[e.b][e.a] = e.weight;
    }
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!dist[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (!dist[k][j]) continue;
        const int through = *dist[i][k] + *dist[k][j];
        if (!dist[i][j] || through < *dist[i][j]) dist[i][j] = through;
      }
    }
  return dist;
}

std::optional<int> brute_systole(const LinkGraph& link) {
  const int n = static_cast<int>(link.vertices.size());
  if (n > 24) throw PreconditionError("brute systole limited to 24 link vertices");

  std::optional<int> best;
  auto offer = [&best](int weight) {
    if (!best || weight < *best) best = weight;
  };

  // Parallel pairs: two cheapest edges between the same endpoints.
  std::vector<std::vector<std::vector<int>>> weights(n, std::vector<std::vector<int>>(n));
  for (const auto& e : link.edges) {
    weights[e.a][e.b].push_back(e.weight);
    weights[e.b][e.a].push_back(e.weight);
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto& w = weights[a][b];
      if (w.size() >= 2) {
        std::sort(w.begin(), w.end());
        offer(w[0] + w[1]);
      }
    }

  // Vertex-simple cycles of length >= 3: root at the least vertex, walk with
  // second vertex < closing vertex; consecutive pairs use their cheapest
  // parallel edge.  Prefix weights at or above the best are cut, which
  // cannot hide a minimum.
  std::vector<bool> visited(n, false);
  std::vector<int> path;
  auto walk = [&](auto&& self, int root, int v, int weight_so_far) -> void {
    if (best && weight_so_far >= *best) return;
    for (int next = 0; next < n; ++next) {
      if (weights[v][next].empty()) continue;
      const int step = *std::min_element(weights[v][next].begin(), weights[v][next].end());
      if (next == root && path.size() >= 3 && path[1] < v) {
        offer(weight_so_far + step);
        continue;
      }
      if (visited[next] || next <= root) continue;
      visited[next] = true;
      path.push_back(next);
      self(self, root, next, weight_so_far + step);
      path.pop_back();
      visited[next] = false;
    }
  };
  for (int root = 0; root < n; ++root) {
    std::fill(visited.begin(), visited.end(), false);
    visited[root] = true;
    path = {root};
    walk(walk, root, root, 0);
  }
  return best;
}

bool brute_orientation_exists(const LabeledGraph& g, const OrientationOptions& options) {
  if (g.edge_count() > 16)
    throw PreconditionError("brute orientation search limited to 16 edges");
  if (!is_almost_large_type(g))
    throw PreconditionError("graph is not of almost large type");
  const int m = g.edge_count();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<bool> forward(m);
    for (int e = 0; e < m; ++e) forward[e] = (mask >> e) & 1u;
    if (validate_orientation(DirectedLabeledGraph(g, std::move(forward)), options).valid)
      return true;
  }
  return false;
}

std::vector<SubgraphWitness> brute_full_subgraphs(const LabeledGraph& g,
                                                  SubgraphWitness::Kind kind) {
  std::vector<SubgraphWitness> out;
  const int n = g.vertex_count();
  switch (kind) {
    case SubgraphWitness::Kind::TwoPathBigLabel:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            if (a == b || b == c || a == c) continue;
            if (!g.adjacent(a, b) || !g.adjacent(b, c) || g.adjacent(a, c)) continue;
            if (g.label_at(a, b) <= 2 && g.label_at(b, c) <= 2) continue;
            out.push_back({kind, {a, b, c}, {g.label_at(a, b), g.label_at(b, c)}});
          }
      break;
    case SubgraphWitness::Kind::ThreePathAll2:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
              if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
              if (g.label_at(a, b) != 2 || g.label_at(b, c) != 2 || g.label_at(c, d) != 2)
                continue;
              if (g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, d)) continue;
              out.push_back({kind, {a, b, c, d}, {2, 2, 2}});
            }
      break;
    case SubgraphWitness::Kind::Triangle:
      for (const auto& t : all_triangles(g))
        out.push_back({kind,
                       {t[0], t[1], t[2]},
                       {g.label_at(t[0], t[1]), g.label_at(t[1], t[2]),
                        g.label_at(t[2], t[0])}});
      break;
  }
  return out;
}

}  // namespace atlink::oracle
