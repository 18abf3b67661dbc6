#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbd/report.hpp"

namespace rbd {

// Deliberate single-constant breakage, used to show that the scenario suite
// notices. DeltaK2Sign flips the discrepancy contribution of every local
// resolution; HjTerm bumps the last term of every C_{p,q} string.
enum class Fault { None, DeltaK2Sign, HjTerm };

std::optional<Fault> parse_fault(std::string_view name);
std::string to_string(Fault f);

struct ScenarioResult {
  std::string name;
  int criterion = 0;
  // "literature" for values stated in the source computation, "derived" for
  // values produced by an independent check.
  std::string origin;
  Json expected;
  Json computed;
  bool pass = false;
  std::optional<std::string> error;
};

std::vector<std::string> scenario_names();

// Runs every scenario. Results come back in declaration order regardless of
// how the work was scheduled.
std::vector<ScenarioResult> run_scenarios(Fault fault = Fault::None, bool parallel = true);

Json verify_report(const std::vector<ScenarioResult>& results, Fault fault);

}  // namespace rbd
