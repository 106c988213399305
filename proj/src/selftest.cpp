#include "atlink/selftest.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "json.hpp"

#include "atlink/classify.hpp"
#include "atlink/oracles.hpp"

namespace atlink {

void for_each_graph(int n, const std::vector<int>& labels, bool triangle_free_only,
                    const std::function<void(const LabeledGraph&)>& fn) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const int p = static_cast<int>(pairs.size());

  for (unsigned mask = 0; mask < (1u << p); ++mask) {
    if (triangle_free_only) {
      unsigned adj[8] = {};
      bool triangle = false;
      for (int k = 0; k < p && !triangle; ++k) {
        if (!(mask >> k & 1u)) continue;
        const auto& [i, j] = pairs[k];
        if (adj[i] & adj[j]) triangle = true;
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
      if (triangle) continue;
    }
    std::vector<int> chosen;
    for (int k = 0; k < p; ++k)
      if (mask >> k & 1u) chosen.push_back(k);
    // Odometer over label assignments for the chosen pairs.
    std::vector<size_t> pick(chosen.size(), 0);
    while (true) {
      std::vector<GraphEdge> edges;
      edges.reserve(chosen.size());
      for (size_t k = 0; k < chosen.size(); ++k)
        edges.push_back({pairs[chosen[k]].first, pairs[chosen[k]].second,
                         labels[pick[k]]});
      fn(LabeledGraph::make_indexed(n, edges));
      size_t digit = 0;
      while (digit < pick.size() && ++pick[digit] == labels.size()) pick[digit++] = 0;
      if (digit == pick.size()) break;
    }
  }
}

namespace {

struct SuiteCollector {
  SuiteResult result;
  std::mutex mutex;

  void record(bool ok, const std::function<std::string()>& message) {
    std::lock_guard<std::mutex> lock(mutex);
    ++result.checked;
    if (!ok) {
      ++result.mismatches;
      if (result.failures.size() < 10) result.failures.push_back(message());
    }
  }
};

// Distributes the graphs of one sweep over the worker pool: every worker
// replays the (cheap) enumeration and takes its residue class.
void parallel_sweep(int n, const std::vector<int>& labels, bool tf_only, int jobs,
                    const std::function<void(const LabeledGraph&)>& fn) {
  if (jobs <= 1) {
    for_each_graph(n, labels, tf_only, fn);
    return;
  }
  std::vector<std::thread> threads;
  for (int w = 0; w < jobs; ++w)
    threads.emplace_back([&, w]() {
      long long index = 0;
      for_each_graph(n, labels, tf_only, [&](const LabeledGraph& g) {
        if (index++ % jobs == w) fn(g);
      });
    });
  for (auto& t : threads) t.join();
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  const auto& labels = options.labels;
  const int jobs = std::max(1, options.jobs);

  SuiteCollector equivalence;
  equivalence.result.name = "triangle_free_equivalence";
  for (int n = 3; n <= options.max_vertices; ++n)
    parallel_sweep(n, labels, true, jobs, [&](const LabeledGraph& g) {
      const bool bipartite_join = complete_bipartite_all2_parts(g).has_value();
      const bool witnessed = connected_components(g).size() > 1 ||
                             find_full_2path_big_label(g).has_value() ||
                             find_full_3path_all2(g).has_value();
      equivalence.record(bipartite_join != witnessed,
                         [&] { return "equivalence failed on " + serialize_graph(g); });
    });
  report.suites.push_back(equivalence.result);

  SuiteCollector witness;
  witness.result.name = "witness_search_vs_brute";
  for (int n = 1; n <= options.max_vertices; ++n)
    parallel_sweep(n, labels, false, jobs, [&](const LabeledGraph& g) {
      bool ok = true;
      const auto two = find_full_2path_big_label(g);
      const auto brute2 =
          oracle::brute_full_subgraphs(g, SubgraphWitness::Kind::TwoPathBigLabel);
      ok = ok && (two.has_value() == !brute2.empty());
      if (two) {
        ok = ok && witness_holds(g, *two);
        ok = ok && std::any_of(brute2.begin(), brute2.end(), [&](const SubgraphWitness& b) {
               return b.vertices == two->vertices && b.labels == two->labels;
             });
      }
      const auto three = find_full_3path_all2(g);
      const auto brute3 =
          oracle::brute_full_subgraphs(g, SubgraphWitness::Kind::ThreePathAll2);
      ok = ok && (three.has_value() == !brute3.empty());
      if (three) ok = ok && witness_holds(g, *three);
      const auto tri = find_triangle(g);
      const auto brute_tri = oracle::brute_full_subgraphs(g, SubgraphWitness::Kind::Triangle);
      ok = ok && (tri.has_value() == !brute_tri.empty());
      if (tri) ok = ok && tri->vertices == brute_tri.front().vertices;
      witness.record(ok, [&] { return "witness search mismatch on " + serialize_graph(g); });
    });
  report.suites.push_back(witness.result);

  SuiteCollector distances;
  distances.result.name = "link_distance_vs_floyd_warshall";
  SuiteCollector girth;
  girth.result.name = "systole_vs_brute";
  SuiteCollector structure;
  structure.result.name = "link_structure";
  for (int n = 1; n <= std::min(options.max_vertices, 4); ++n)
    parallel_sweep(n, labels, false, jobs, [&](const LabeledGraph& g) {
      const auto dg = direct_lexicographically(g);
      for (const auto metric : {LinkMetric::Isosceles, LinkMetric::Equilateral}) {
        const auto link = build_link(dg, metric);

        bool sums_ok = true;
        for (int r = 0; r < link.relation_count(); ++r) {
          int sum = 0;
          for (int c = 0; c < 3; ++c) sum += link.edges[link.edge_id(r, static_cast<Corner>(c))].weight;
          sums_ok = sums_ok && sum == kStraightAngle;
        }
        // Non-adjacent vertex directions stay at least a straight angle
        // apart in the isosceles metric.
        bool far_ok = true;
        if (metric == LinkMetric::Isosceles) {
          for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v) {
              if (g.adjacent(u, v)) continue;
              for (int su : {-1, +1})
                for (int sv : {-1, +1}) {
                  const int a = link.vertex_of(g.name(u), su);
                  const int b = link.vertex_of(g.name(v), sv);
                  const auto d = link_distance(link, LinkPoint::at_vertex(a),
                                               LinkPoint::at_vertex(b));
                  if (d && *d < kStraightAngle) far_ok = false;
                }
            }
        }
        structure.record(sums_ok && far_ok,
                         [&] { return "link structure violated on " + serialize_graph(g); });

        if (link.vertices.size() <= 40) {
          const auto fw = oracle::floyd_warshall_all_pairs(link);
          bool agree = true;
          for (size_t i = 0; i < link.vertices.size() && agree; ++i)
            for (size_t j = 0; j < link.vertices.size() && agree; ++j) {
              const auto d = link_distance(link, LinkPoint::at_vertex(static_cast<int>(i)),
                                           LinkPoint::at_vertex(static_cast<int>(j)));
              agree = d == fw[i][j];
            }
          distances.record(agree,
                           [&] { return "distance disagreement on " + serialize_graph(g); });
        }
        if (link.vertices.size() <= 24) {
          const bool agree = systole(link) == oracle::brute_systole(link);
          girth.record(agree, [&] { return "systole disagreement on " + serialize_graph(g); });
        }
      }
    });
  report.suites.push_back(distances.result);
  report.suites.push_back(girth.result);
  report.suites.push_back(structure.result);

  SuiteCollector orientation;
  orientation.result.name = "orientation_search_vs_brute";
  for (int n = 3; n <= options.max_vertices; ++n)
    parallel_sweep(n, labels, false, jobs, [&](const LabeledGraph& g) {
      if (g.edge_count() > 6 || !is_almost_large_type(g)) return;
      const auto found = orient_search(g);
      const bool exists = oracle::brute_orientation_exists(g);
      bool ok = found.has_value() == exists;
      if (found) ok = ok && validate_orientation(*found).valid;
      orientation.record(ok, [&] { return "orientation mismatch on " + serialize_graph(g); });
    });
  report.suites.push_back(orientation.result);

  SuiteCollector rewriting;
  rewriting.result.name = "triangular_equivalence";
  for (int n = 1; n <= options.max_vertices; ++n)
    parallel_sweep(n, labels, false, jobs, [&](const LabeledGraph& g) {
      rewriting.record(verify_triangular_equivalence(direct_lexicographically(g)),
                       [&] { return "rewriting mismatch on " + serialize_graph(g); });
    });
  report.suites.push_back(rewriting.result);

  SuiteCollector join;
  join.result.name = "join_invariants";
  for (int n = 1; n <= options.max_vertices; ++n)
    parallel_sweep(n, labels, false, jobs, [&](const LabeledGraph& g) {
      bool ok = true;
      if (const auto parts = join_decompose(g)) {
        ok = ok && !parts->first.empty() && !parts->second.empty();
        ok = ok && parts->first.size() + parts->second.size() ==
                       static_cast<size_t>(g.vertex_count());
        for (int u : parts->first)
          for (int v : parts->second) ok = ok && g.label_at(u, v) == 2;
      } else {
        ok = ok && !complete_bipartite_all2_parts(g).has_value() &&
             g.vertex_count() >= 1;
      }
      join.record(ok, [&] { return "join invariant violated on " + serialize_graph(g); });
    });
  report.suites.push_back(join.result);

  return report;
}

std::string serialize_selftest(const SelftestReport& report) {
  using ojson = nlohmann::ordered_json;
  ojson out;
  out["ok"] = report.ok();
  ojson suites = ojson::array();
  for (const auto& s : report.suites) {
    ojson js;
    js["name"] = s.name;
    js["checked"] = s.checked;
    js["mismatches"] = s.mismatches;
    auto failures = s.failures;
    std::sort(failures.begin(), failures.end());
    js["failures"] = failures;
    suites.push_back(js);
  }
  out["suites"] = suites;
  return out.dump(2) + "\n";
}

}  // namespace atlink
