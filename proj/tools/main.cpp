#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "spinflux/scenarios.hpp"

namespace {

using spinflux::Claim;
using spinflux::Rational;
using spinflux::Scalar;
using spinflux::ScenarioOptions;
using spinflux::ScenarioReport;
using spinflux::Var;

// "3/4" | "-2" | "symbolic" | preset handled by the caller
std::optional<Scalar> parse_param(const std::string& text, Var symbolic_var) {
  if (text.empty()) return std::nullopt;
  if (text == "symbolic") return Scalar::var(symbolic_var);
  return Scalar(spinflux::parse_rational(text));
}

int emit(const ScenarioReport& report, const std::string& json_path) {
  std::cout << spinflux::render_text(report);
  std::cerr << "# elapsed: " << report.timing_ms << " ms\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
    out << spinflux::report_to_json(report).dump(2) << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for spinor field equations with torsion and flux forms"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run one scenario and verify its claims");
  std::string scenario;
  run->add_option("scenario", scenario, "sasakian3 | g2 | aloff-wallach | dim8 | lie-group")
      ->required();
  std::string p_str, q_str, s_str, y_str, f_str, r_str, preset, json_path;
  std::vector<std::string> constraints;
  std::uint64_t seed = 0;
  run->add_option("--p", p_str, "exact rational (e.g. 3/4) or 'symbolic'");
  run->add_option("--q", q_str, "exact rational or 'symbolic'");
  run->add_option("--s", s_str, "metric parameter, exact rational or 'symbolic'");
  run->add_option("--y", y_str, "metric parameter, exact rational or 'symbolic'");
  run->add_option("--f", f_str, "flux scale, exact rational or 'symbolic'");
  run->add_option("--r", r_str, "torsion scale, exact rational or 'symbolic'");
  run->add_option("--preset", preset, "parameter preset: coupled | supergravity")
      ->check(CLI::IsMember({"coupled", "supergravity"}));
  run->add_option("--constraint", constraints, "t-psi-zero | f-psi-zero (repeatable)")
      ->check(CLI::IsMember({"t-psi-zero", "f-psi-zero"}));
  run->add_option("--seed", seed, "seed for deterministic test data");
  run->add_option("--json", json_path, "write the report as JSON to this path");

  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  std::string verify_json;
  verify->add_option("--json", verify_json, "write the aggregate report as JSON to this path");

  auto* conventions = app.add_subcommand("conventions", "print the spinor-basis conventions in use");
  std::string conv_json;
  conventions->add_option("--json", conv_json,
                          "also export the generator matrices and the basis to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      ScenarioOptions opts;
      opts.p = parse_param(p_str, Var::p);
      opts.q = parse_param(q_str, Var::q);
      opts.s = parse_param(s_str, Var::s);
      opts.y = parse_param(y_str, Var::y);
      opts.f = parse_param(f_str, Var::f);
      if (preset == "coupled") {
        opts.p = Scalar(3, 4);
        opts.q = Scalar(1);
      } else if (preset == "supergravity") {
        opts.p = Scalar(1, 144);
        opts.q = Scalar(-8, 144);
      }
      for (const auto& c : constraints) {
        if (c == "t-psi-zero") opts.t_psi_zero = true;
        if (c == "f-psi-zero") opts.f_psi_zero = true;
      }
      opts.seed = seed;
      return emit(spinflux::run_scenario(scenario, opts), json_path);
    }
    if (conventions->parsed()) {
      const auto& model = spinflux::standard_model();
      std::cout << model.conventions << "\n";
      if (!conv_json.empty()) {
        spinflux::Json j;
        j["conventions"] = model.conventions;
        j["generators7"] = spinflux::generators_to_json(model.rep7);
        j["generators8"] = spinflux::generators_to_json(model.rep8);
        spinflux::Json basis = spinflux::Json::array();
        for (int k = 1; k <= 8; ++k) {
          spinflux::Json v = spinflux::Json::array();
          for (const auto& c : model.psi(k).c) v.push_back(c.to_string());
          basis.push_back(std::move(v));
        }
        j["basis"] = std::move(basis);
        std::ofstream out(conv_json);
        if (!out) {
          std::cerr << "cannot write " << conv_json << "\n";
          return 2;
        }
        out << j.dump(2) << "\n";
      }
      return 0;
    }
    // verify
    auto reports = spinflux::verify_all();
    int failures = 0;
    spinflux::Json all = spinflux::Json::array();
    long total_ms = 0;
    for (const auto& r : reports) {
      failures += r.fail_count();
      total_ms += r.timing_ms;
      bool ok = r.all_passed();
      std::cout << "[" << (ok ? "PASS" : "FAIL") << "] " << r.name << "\n";
      for (const auto& c : r.claims) {
        const char* tag = c.status == Claim::Status::pass ? "PASS"
                          : c.status == Claim::Status::fail ? "FAIL"
                                                            : "NOTE";
        std::cout << "  [" << tag << "] " << c.anchor << ": ";
        if (c.status == Claim::Status::note)
          std::cout << c.text << (c.computed.empty() ? "" : " -- " + c.computed) << "\n";
        else
          std::cout << c.text << ": expected " << c.expected << " computed " << c.computed << "\n";
      }
      all.push_back(spinflux::report_to_json(r));
    }
    std::cerr << "# elapsed: " << total_ms << " ms\n";
    if (!verify_json.empty()) {
      std::ofstream out(verify_json);
      if (!out) {
        std::cerr << "cannot write " << verify_json << "\n";
        return 2;
      }
      out << all.dump(2) << "\n";
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " claim(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
