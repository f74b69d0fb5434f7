#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinflux/scenarios.hpp"

namespace py = pybind11;
using namespace spinflux;

namespace {

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::optional<Scalar> parse_opt(const std::optional<std::string>& text, Var symbolic_var) {
  if (!text) return std::nullopt;
  if (*text == "symbolic") return Scalar::var(symbolic_var);
  return Scalar(parse_rational(*text));
}

py::object py_run_scenario(const std::string& name, const std::optional<std::string>& p,
                           const std::optional<std::string>& q,
                           const std::optional<std::string>& s,
                           const std::optional<std::string>& y,
                           const std::optional<std::string>& f,
                           const std::vector<std::string>& constraints, std::uint64_t seed) {
  ScenarioOptions opts;
  opts.p = parse_opt(p, Var::p);
  opts.q = parse_opt(q, Var::q);
  opts.s = parse_opt(s, Var::s);
  opts.y = parse_opt(y, Var::y);
  opts.f = parse_opt(f, Var::f);
  for (const auto& c : constraints) {
    if (c == "t-psi-zero")
      opts.t_psi_zero = true;
    else if (c == "f-psi-zero")
      opts.f_psi_zero = true;
    else
      throw std::invalid_argument("unknown constraint '" + c + "'");
  }
  opts.seed = seed;
  return json_to_py(report_to_json(run_scenario(name, opts)));
}

py::object py_verify() {
  Json all = Json::array();
  for (const auto& r : verify_all()) all.push_back(report_to_json(r));
  return json_to_py(all);
}

Matrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  Matrix m(int(rows.size()), int(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(int(i), int(j)) = Scalar::of(rows[i][j]);
  }
  return m;
}

py::object py_rref(const std::vector<std::vector<std::string>>& rows) {
  RrefResult res = rref(matrix_from_strings(rows));
  Json j;
  Json entries = Json::array();
  for (int i = 0; i < res.r.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < res.r.cols(); ++c) row.push_back(res.r.at(i, c).to_string());
    entries.push_back(std::move(row));
  }
  j["rref"] = std::move(entries);
  j["pivot_columns"] = res.pivot_columns;
  Json conds = Json::array();
  for (const auto& c : res.conditions) conds.push_back(c.value.to_string());
  j["conditions"] = std::move(conds);
  j["rank"] = res.rank();
  return json_to_py(j);
}

py::object py_solve(const std::vector<std::vector<std::string>>& rows,
                    const std::vector<std::string>& rhs,
                    const std::optional<std::vector<std::string>>& labels) {
  Matrix m = matrix_from_strings(rows);
  std::vector<Scalar> b;
  for (const auto& x : rhs) b.push_back(Scalar::of(x));
  auto outcome = solve_affine(m, b, labels.value_or(std::vector<std::string>{}));
  Json j;
  if (is_infeasible(outcome)) {
    j["infeasible"] = true;
    Json obs = Json::array();
    for (const auto& o : std::get<Infeasible>(outcome).obstructions) obs.push_back(o.to_string());
    j["obstructions"] = std::move(obs);
  } else {
    j["infeasible"] = false;
    j["solution"] = space_to_json(space_of(outcome));
  }
  return json_to_py(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact solver for spinor field equations with torsion and flux forms";
  m.def("run_scenario", &py_run_scenario,
        "Run one scenario and return its claim report as a dict.\n"
        "Parameters are exact rational strings like '3/4' or 'symbolic'.",
        py::arg("name"), py::arg("p") = std::nullopt, py::arg("q") = std::nullopt,
        py::arg("s") = std::nullopt, py::arg("y") = std::nullopt, py::arg("f") = std::nullopt,
        py::arg("constraints") = std::vector<std::string>{}, py::arg("seed") = 0);
  m.def("verify", &py_verify, "Run the full verification suite; returns a list of reports.");
  m.def("conventions", []() { return standard_model().conventions; },
        "Describe the distinguished spinor basis in use.");
  m.def("rref", &py_rref,
        "Exact reduced row echelon form of a matrix of scalar strings; records "
        "the nonvanishing conditions of parameter-dependent pivots.",
        py::arg("rows"));
  m.def("solve", &py_solve, "Exact affine solution set of M x = b.", py::arg("rows"),
        py::arg("rhs"), py::arg("labels") = std::nullopt);
  m.attr("__version__") = "0.1.0";
}
