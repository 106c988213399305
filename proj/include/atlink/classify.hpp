#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atlink/certificate.hpp"

namespace atlink {

enum class Verdict {
  AcylindricallyHyperbolic,
  Reducible,
  SmallCase,
  OutOfMethodScope,
};

std::string verdict_name(Verdict v);

// Outcome of classification.  Exactly one evidence member is engaged:
// a verified certificate for rank-one routes, a vertex split for free
// products and joins, or a prose description for small and out-of-scope
// inputs.  Flags carry only claims the route actually derives; they are
// conclusions of the classification, never recomputed facts.
struct ClassificationReport {
  Verdict verdict = Verdict::OutOfMethodScope;
  std::string route;
  std::optional<RankOneCertificate> certificate;
  std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> split;
  std::vector<std::string> factors;  // with split, for join decompositions
  std::string description;
  std::map<std::string, bool> flags;
  std::string orientation_method;  // rank-one triangle route only
};

// Routes:
//   small_case                  |V| <= 2
//   disconnected_free_product   free product across components
//   two_path_witness            rank-one certificate on a full 2-path
//   three_path_witness          rank-one certificate on a full 3-path
//   triangle_witness            rank-one certificate on a directed 3-cycle
//   complete_bipartite_join     direct product of two free groups
//   cone_join                   direct product Z x free
//   no_appropriate_direction    orientation search exhausted
//   outside_hypotheses          neither triangle-free nor almost large

// Pre: |V| <= 2.
ClassificationReport classify_small(const LabeledGraph& g);

// Pre: |V| >= 3, triangle-free.  Decides via the two equivalent conditions
// (not complete bipartite all-2 vs. disconnection / full path witness); if
// the computed sides disagree a std::logic_error is raised, since that would
// falsify the underlying equivalence.
ClassificationReport classify_triangle_free(const LabeledGraph& g);

// Pre: |V| >= 3, almost large type.
ClassificationReport classify_almost_large(const LabeledGraph& g);

// Full dispatch over the preceding routines.
ClassificationReport classify(const LabeledGraph& g);

// JSON {"verdict": ..., "route": ..., "evidence": {...}, "flags": {...}}.
std::string serialize_report(const ClassificationReport& report);

// One-paragraph plain-text rendering.
std::string report_text(const ClassificationReport& report);

}  // namespace atlink
