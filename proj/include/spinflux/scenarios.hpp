#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinflux/alignment.hpp"
#include "spinflux/json_io.hpp"
#include "spinflux/rng.hpp"

namespace spinflux {

struct Claim {
  enum class Status { pass, fail, note };
  std::string anchor;
  std::string text;
  std::string expected;
  std::string computed;
  Status status = Status::pass;
};

struct ScenarioReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Claim> claims;
  std::optional<Json> solution_summary;
  long timing_ms = 0;  // human output only, never serialized

  bool all_passed() const;
  int fail_count() const;
};

struct ScenarioOptions {
  std::optional<Scalar> p, q, s, y, f;
  bool t_psi_zero = false;
  bool f_psi_zero = false;
  std::uint64_t seed = 0;
};

/// Runs one named scenario: sasakian3 | g2 | aloff-wallach | dim8 | lie-group.
/// Throws std::invalid_argument for unknown names.
ScenarioReport run_scenario(const std::string& name, const ScenarioOptions& opts);

/// Full verification suite; one report per criterion, in order.
std::vector<ScenarioReport> verify_all();

std::string render_text(const ScenarioReport& report);
Json report_to_json(const ScenarioReport& report);

/// Deterministic spinor with entries in [-9, 9]; for dim 16 both chirality
/// halves are forced nonzero.
Spinor seeded_spinor(SmallRng& rng, int dim);

}  // namespace spinflux
