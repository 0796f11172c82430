#include "thetanil/commands.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace thetanil;

namespace {

RunOptions options(std::uint64_t seed, int threads) {
  RunOptions r;
  r.seed = seed;
  r.threads = threads;
  return r;
}

py::dict summary_dict(const NullconeSummary& s) {
  py::dict d;
  d["orbits"] = s.orbit_count;
  d["components"] = s.component_count;
  d["dim"] = s.component_dim;
  d["rank"] = s.rank;
  d["nregular"] = s.nregular;
  d["very_nregular"] = s.very_nregular;
  return d;
}

}  // namespace

PYBIND11_MODULE(_thetanil, m) {
  m.doc() = "Nilpotent orbits of theta-groups";

  py::register_exception<RetryBudgetExceeded>(m, "RetryBudgetExceeded", PyExc_RuntimeError);

  m.def("root_system", [](const std::string& type) {
    RootSystem rs = build_root_system(type);
    py::dict d;
    d["type"] = rs.label();
    d["cartan"] = rs.cartan;
    d["marks"] = rs.marks;
    d["positive_roots"] = std::vector<IntVec>(rs.roots.begin(), rs.roots.begin() + rs.npos);
    return d;
  }, py::arg("type"));

  m.def("coset_count", [](const std::string& type, std::optional<std::vector<int>> extended_minus,
                          std::optional<std::vector<int>> simple) {
    CosetConfig cfg;
    cfg.type = type;
    cfg.extended_minus = extended_minus;
    cfg.simple = simple;
    std::string out = cmd_cosets(cfg);
    return std::stoll(out.substr(0, out.find('\n')));
  }, py::arg("type"), py::arg("extended_minus") = py::none(), py::arg("simple") = py::none());

  m.def("pisystem_types", [](const std::string& type) {
    RootSystem rs = build_root_system(type);
    std::vector<std::string> out;
    for (const auto& c : classify_all(rs))
      if (!c.empty()) out.push_back(dynkin_type(rs, c));
    return out;
  }, py::arg("type"), "Dynkin types of the nonempty pi-system classes");

  m.def("nilpotent_wdds", [](const std::string& type) {
    std::vector<IntVec> out;
    for (const auto& c : classify_nilpotent_g(*make_algebra(type))) out.push_back(c.wdd);
    return out;
  }, py::arg("type"));

  m.def("kac_diagrams", [](const std::string& type, int order, bool primitive_only) {
    std::vector<IntVec> out;
    for (const auto& k : enumerate_kac_diagrams(build_root_system(type), order, primitive_only)) out.push_back(k.labels);
    return out;
  }, py::arg("type"), py::arg("order"), py::arg("primitive_only") = false);

  m.def("grading_dims", [](const std::string& type, const std::vector<int>& kac) {
    return grading_from_kac(make_algebra(type), KacDiagram{kac}).dims();
  }, py::arg("type"), py::arg("kac"));

  m.def("orbits_json", [](const std::string& type, const std::vector<int>& kac, const std::string& method,
                          std::uint64_t seed, int threads) {
    RunConfig cfg;
    cfg.type = type;
    cfg.kac = KacDiagram{kac};
    cfg.method = parse_method(method);
    cfg.run = options(seed, threads);
    cfg.json = true;
    py::gil_scoped_release release;
    return cmd_orbits(cfg);
  }, py::arg("type"), py::arg("kac"), py::arg("method") = "auto", py::arg("seed") = 1, py::arg("threads") = 1);

  m.def("nregular", [](const std::string& type, int order, const std::string& method, int threads) {
    SurveyRow row;
    {
      py::gil_scoped_release release;
      row = nregular_survey(make_algebra(type), order, parse_method(method), options(1, threads));
    }
    py::dict d = summary_dict(row.summary);
    d["kac"] = row.kac.labels;
    return d;
  }, py::arg("type"), py::arg("order"), py::arg("method") = "auto", py::arg("threads") = 1);
}
