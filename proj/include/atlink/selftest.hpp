#pragma once

#include <functional>
#include <string>
#include <vector>

#include "atlink/graph.hpp"

namespace atlink {

// Deterministic enumeration of every labeled graph on n vertices named
// "v1".."vn" with labels drawn from the given menu, optionally restricted to
// triangle-free graphs (cheap bitmask pre-filter).  Edge sets are visited in
// subset order over the lexicographic pair list, labels in odometer order.
void for_each_graph(int n, const std::vector<int>& labels, bool triangle_free_only,
                    const std::function<void(const LabeledGraph&)>& fn);

struct SelftestOptions {
  int max_vertices = 4;
  std::vector<int> labels = {2, 3};
  int jobs = 1;
};

struct SuiteResult {
  std::string name;
  long long checked = 0;
  long long mismatches = 0;
  std::vector<std::string> failures;  // capped per suite
};

struct SelftestReport {
  std::vector<SuiteResult> suites;
  bool ok() const {
    for (const auto& s : suites)
      if (s.mismatches != 0) return false;
    return true;
  }
};

// Oracle-backed sweeps over the bounded graph family: each fast path is
// checked against its slow counterpart, plus the structural invariants that
// must hold for every instance.
SelftestReport run_selftest(const SelftestOptions& options);

std::string serialize_selftest(const SelftestReport& report);

}  // namespace atlink
