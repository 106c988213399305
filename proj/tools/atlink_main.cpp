// Command line surface. Exit codes: 0 verdict or success, 1 failed
// verification or failed sweep, 2 unusable input.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "atlink/certificate.hpp"
#include "atlink/classify.hpp"
#include "atlink/errors.hpp"
#include "atlink/graph.hpp"
#include "atlink/link.hpp"
#include "atlink/orientation.hpp"
#include "atlink/presentation.hpp"
#include "atlink/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

using ojson = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw atlink::ParseError("cannot open \"" + path + "\"");
    buf << in.rdbuf();
  }
  return buf.str();
}

std::string word_text(const atlink::Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& letter : w) {
    if (!out.empty()) out += ' ';
    out += letter.gen;
    if (letter.exp < 0) out += "^-1";
  }
  return out;
}

atlink::DirectedLabeledGraph pick_direction(const atlink::ParsedGraph& parsed) {
  if (parsed.directed) return *parsed.directed;
  return atlink::direct_lexicographically(parsed.graph);
}

int run_classify(const std::string& text, bool as_json) {
  auto parsed = atlink::parse_graph(text);
  auto report = atlink::classify(parsed.graph);
  if (as_json) {
    std::cout << atlink::serialize_report(report);
  } else {
    std::cout << atlink::report_text(report);
  }
  return kExitOk;
}

int run_present(const std::string& text, const std::string& kind, bool as_json) {
  auto parsed = atlink::parse_graph(text);
  atlink::Presentation pres;
  if (kind == "standard") {
    pres = parsed.directed ? atlink::standard_presentation(*parsed.directed)
                           : atlink::standard_presentation(parsed.graph);
  } else {
    pres = atlink::triangular_presentation(pick_direction(parsed)).pres;
  }
  if (as_json) {
    std::cout << atlink::serialize_presentation(pres);
    return kExitOk;
  }
  std::cout << "generators:";
  for (const auto& g : pres.generators) std::cout << ' ' << g;
  std::cout << "\nrelations:\n";
  for (const auto& rel : pres.relations) {
    std::cout << "  " << word_text(rel.left) << " = " << word_text(rel.right)
              << "\n";
  }
  return kExitOk;
}

int run_link(const std::string& text, atlink::LinkMetric metric, bool as_json) {
  auto parsed = atlink::parse_graph(text);
  auto link = atlink::build_link(pick_direction(parsed), metric);
  auto girth = atlink::systole(link);
  if (as_json) {
    ojson out = ojson::parse(atlink::serialize_link(link));
    if (girth) {
      out["systole"] = *girth;
    } else {
      out["systole"] = nullptr;
    }
    out["locally_cat0"] = atlink::check_link_condition(link);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "metric: "
            << (metric == atlink::LinkMetric::Isosceles ? "isosceles"
                                                        : "equilateral")
            << "\nvertices: " << link.vertices.size()
            << "\nedges: " << link.edges.size() << "\nsystole: ";
  if (girth) {
    std::cout << *girth;
  } else {
    std::cout << "none";
  }
  std::cout << "\nlocally CAT(0): "
            << (atlink::check_link_condition(link) ? "yes" : "no") << "\n";
  return kExitOk;
}

int run_orient(const std::string& text, bool as_json) {
  auto parsed = atlink::parse_graph(text);
  if (!atlink::is_almost_large_type(parsed.graph)) {
    throw atlink::PreconditionError("graph is not of almost large type");
  }
  auto found = atlink::try_orient(parsed.graph);
  if (as_json) {
    ojson out;
    out["orientable"] = found.has_value();
    if (found) {
      out["method"] = found->method;
      out["graph"] = ojson::parse(atlink::serialize_graph(found->dg));
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  if (!found) {
    std::cout << "orientable: no\n";
    return kExitOk;
  }
  std::cout << "orientable: yes\nmethod: " << found->method << "\n";
  const auto& g = found->dg.base();
  for (int e = 0; e < g.edge_count(); ++e) {
    std::cout << "  " << g.name(found->dg.source(e)) << " -> "
              << g.name(found->dg.target(e)) << "  label "
              << g.edge(e).label << "\n";
  }
  return kExitOk;
}

int run_certify(const std::string& text, bool as_json) {
  auto parsed = atlink::parse_graph(text);
  auto report = atlink::classify(parsed.graph);
  if (!report.certificate) {
    std::cerr << "no rank-one certificate: verdict "
              << atlink::verdict_name(report.verdict) << " via " << report.route
              << "\n";
    return kExitFailed;
  }
  const auto& cert = *report.certificate;
  if (as_json) {
    std::cout << atlink::serialize_certificate(cert);
    return kExitOk;
  }
  std::cout << "construction: " << cert.construction << "\nmetric: "
            << (cert.metric == atlink::LinkMetric::Isosceles ? "isosceles"
                                                             : "equilateral")
            << "\nwitness: " << word_text(cert.witness)
            << "\nwitness in vertex generators: "
            << word_text(cert.witness_standard) << "\nassertions:\n";
  for (const auto& a : cert.assertions) {
    std::cout << "  " << a.describe() << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& text, bool as_json) {
  auto cert = atlink::parse_certificate(text);
  atlink::VerifyResult result;
  try {
    result = atlink::verify_certificate(cert);
  } catch (const atlink::CertificateError& ex) {
    result.ok = false;
    result.failures = {ex.what()};
  }
  if (as_json) {
    ojson out;
    out["ok"] = result.ok;
    out["failures"] = result.failures;
    std::cout << out.dump(2) << "\n";
  } else if (result.ok) {
    std::cout << "certificate verified\n";
  } else {
    std::cout << "certificate FAILED\n";
    for (const auto& f : result.failures) std::cout << "  " << f << "\n";
  }
  return result.ok ? kExitOk : kExitFailed;
}

int run_selftest(const atlink::SelftestOptions& options, bool as_json) {
  auto report = atlink::run_selftest(options);
  if (as_json) {
    std::cout << atlink::serialize_selftest(report);
  } else {
    for (const auto& suite : report.suites) {
      std::cout << suite.name << ": checked " << suite.checked
                << ", mismatches " << suite.mismatches << "\n";
      for (const auto& f : suite.failures) std::cout << "  " << f << "\n";
    }
    std::cout << (report.ok() ? "all suites passed" : "FAILED") << "\n";
  }
  return report.ok() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acylindrical hyperbolicity checker for Artin-Tits groups of "
               "edge-labeled graphs"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "json";
  std::string presentation_kind = "triangular";
  std::string metric_name = "isosceles";
  bool verify_mode = false;
  atlink::SelftestOptions sweep;

  auto add_common = [&](CLI::App* cmd, const char* what) {
    cmd->add_option("input", input, std::string(what) + ", or - for stdin");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* classify_cmd = app.add_subcommand(
      "classify", "Decide the verdict for a labeled graph and report evidence");
  add_common(classify_cmd, "graph file");

  auto* present_cmd =
      app.add_subcommand("present", "Print a presentation of the group");
  add_common(present_cmd, "graph file");
  present_cmd
      ->add_option("--presentation", presentation_kind,
                   "standard braid relations or the triangular rewriting")
      ->check(CLI::IsMember({"standard", "triangular"}));

  auto* link_cmd = app.add_subcommand(
      "link", "Build the vertex link of the triangular presentation complex; "
              "undirected inputs are directed lexicographically");
  add_common(link_cmd, "graph file");
  link_cmd->add_option("--mode", metric_name, "triangle shape metric")
      ->check(CLI::IsMember({"isosceles", "equilateral"}));

  auto* orient_cmd = app.add_subcommand(
      "orient", "Search for an appropriate direction of an almost-large graph");
  add_common(orient_cmd, "graph file");

  auto* certify_cmd = app.add_subcommand(
      "certify",
      "Emit the rank-one certificate for a graph, or check one with --verify");
  add_common(certify_cmd, "graph file (certificate file with --verify)");
  certify_cmd->add_flag("--verify", verify_mode,
                        "treat the input as a certificate and re-check it");

  auto* selftest_cmd = app.add_subcommand(
      "selftest", "Cross-check the solvers against brute-force oracles over "
                  "exhaustive small-graph sweeps");
  selftest_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  selftest_cmd->add_option("--max-vertices", sweep.max_vertices,
                           "largest sweep size");
  selftest_cmd
      ->add_option("--labels", sweep.labels, "edge labels to sweep over")
      ->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    bool as_json = format == "json";
    if (classify_cmd->parsed()) {
      return run_classify(read_input(input), as_json);
    }
    if (present_cmd->parsed()) {
      return run_present(read_input(input), presentation_kind, as_json);
    }
    if (link_cmd->parsed()) {
      auto metric = metric_name == "isosceles" ? atlink::LinkMetric::Isosceles
                                               : atlink::LinkMetric::Equilateral;
      return run_link(read_input(input), metric, as_json);
    }
    if (orient_cmd->parsed()) {
      return run_orient(read_input(input), as_json);
    }
    if (certify_cmd->parsed()) {
      const auto text = read_input(input);
      return verify_mode ? run_verify(text, as_json)
                         : run_certify(text, as_json);
    }
    if (selftest_cmd->parsed()) {
      if (const char* jobs = std::getenv("ATLINK_SELFTEST_JOBS")) {
        sweep.jobs = std::max(1, std::atoi(jobs));
      }
      return run_selftest(sweep, as_json);
    }
  } catch (const atlink::ParseError& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return kExitBadInput;
  } catch (const atlink::PreconditionError& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return kExitBadInput;
  } catch (const atlink::CertificateError& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 3;
  }
  return kExitOk;
}
