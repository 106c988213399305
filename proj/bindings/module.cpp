// Python face of the library.  Every entry point speaks JSON strings, the
// same schemas the command line tool reads and writes, so the bindings stay
// a thin shim with no parallel object model to keep in sync.

#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"

#include "atlink/certificate.hpp"
#include "atlink/classify.hpp"
#include "atlink/errors.hpp"
#include "atlink/graph.hpp"
#include "atlink/link.hpp"
#include "atlink/orientation.hpp"
#include "atlink/presentation.hpp"
#include "atlink/selftest.hpp"

namespace py = pybind11;
using ojson = nlohmann::ordered_json;

namespace {

atlink::DirectedLabeledGraph pick_direction(const atlink::ParsedGraph& parsed) {
  if (parsed.directed) return *parsed.directed;
  return atlink::direct_lexicographically(parsed.graph);
}

atlink::LinkMetric metric_from(const std::string& mode) {
  if (mode == "isosceles") return atlink::LinkMetric::Isosceles;
  if (mode == "equilateral") return atlink::LinkMetric::Equilateral;
  throw atlink::ParseError("unknown metric \"" + mode + "\"");
}

std::string classify_json(const std::string& graph_json) {
  const auto parsed = atlink::parse_graph(graph_json);
  return atlink::serialize_report(atlink::classify(parsed.graph));
}

std::string presentation_json(const std::string& graph_json, const std::string& kind) {
  const auto parsed = atlink::parse_graph(graph_json);
  if (kind == "standard") {
    const auto pres = parsed.directed
                          ? atlink::standard_presentation(*parsed.directed)
                          : atlink::standard_presentation(parsed.graph);
    return atlink::serialize_presentation(pres);
  }
  if (kind == "triangular") {
    return atlink::serialize_presentation(
        atlink::triangular_presentation(pick_direction(parsed)).pres);
  }
  throw atlink::ParseError("unknown presentation kind \"" + kind + "\"");
}

std::string link_json(const std::string& graph_json, const std::string& mode) {
  const auto parsed = atlink::parse_graph(graph_json);
  const auto link = atlink::build_link(pick_direction(parsed), metric_from(mode));
  ojson out = ojson::parse(atlink::serialize_link(link));
  const auto girth = atlink::systole(link);
  if (girth) {
    out["systole"] = *girth;
  } else {
    out["systole"] = nullptr;
  }
  out["locally_cat0"] = atlink::check_link_condition(link);
  return out.dump(2) + "\n";
}

std::string orient_json(const std::string& graph_json) {
  const auto parsed = atlink::parse_graph(graph_json);
  if (!atlink::is_almost_large_type(parsed.graph)) {
    throw atlink::PreconditionError("graph is not of almost large type");
  }
  const auto found = atlink::try_orient(parsed.graph);
  ojson out;
  out["orientable"] = found.has_value();
  if (found) {
    out["method"] = found->method;
    out["graph"] = ojson::parse(atlink::serialize_graph(found->dg));
  }
  return out.dump(2) + "\n";
}

std::optional<std::string> certify_json(const std::string& graph_json) {
  const auto parsed = atlink::parse_graph(graph_json);
  const auto report = atlink::classify(parsed.graph);
  if (!report.certificate) return std::nullopt;
  return atlink::serialize_certificate(*report.certificate);
}

std::string verify_json(const std::string& certificate_json) {
  const auto cert = atlink::parse_certificate(certificate_json);
  atlink::VerifyResult result;
  try {
    result = atlink::verify_certificate(cert);
  } catch (const atlink::CertificateError& ex) {
    result.ok = false;
    result.failures = {ex.what()};
  }
  ojson out;
  out["ok"] = result.ok;
  out["failures"] = result.failures;
  return out.dump(2) + "\n";
}

std::string selftest_json(int max_vertices, const std::vector<int>& labels, int jobs) {
  atlink::SelftestOptions options;
  options.max_vertices = max_vertices;
  options.labels = labels;
  options.jobs = jobs;
  return atlink::serialize_selftest(atlink::run_selftest(options));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Acylindrical hyperbolicity checker for Artin-Tits groups; all "
            "functions exchange JSON strings";

  py::register_exception<atlink::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<atlink::PreconditionError>(m, "PreconditionError",
                                                    PyExc_ValueError);
  py::register_exception<atlink::CertificateError>(m, "CertificateError",
                                                   PyExc_ValueError);

  m.def("classify", &classify_json, py::arg("graph_json"),
        "Classification report for a labeled graph, as JSON");
  m.def("presentation", &presentation_json, py::arg("graph_json"),
        py::arg("kind") = "triangular",
        "Standard or triangular presentation, as JSON");
  m.def("link", &link_json, py::arg("graph_json"), py::arg("mode") = "isosceles",
        "Vertex link of the presentation complex with systole, as JSON");
  m.def("orient", &orient_json, py::arg("graph_json"),
        "Appropriate direction of an almost-large graph, as JSON");
  m.def("certify", &certify_json, py::arg("graph_json"),
        "Rank-one certificate as JSON, or None when the verdict carries none");
  m.def("verify", &verify_json, py::arg("certificate_json"),
        "Re-check a serialized certificate, as JSON");
  m.def("selftest", &selftest_json, py::arg("max_vertices") = 4,
        py::arg("labels") = std::vector<int>{2, 3}, py::arg("jobs") = 1,
        "Oracle cross-check sweep report, as JSON");
}
