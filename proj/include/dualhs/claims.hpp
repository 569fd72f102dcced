#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualhs/invariants.hpp"

namespace dualhs {

enum class ClaimArguments { module_ideal, module_only, ring_only };

struct ClaimInfo {
  std::string id;
  ClaimArguments arguments;
  std::string statement;
};

const std::vector<ClaimInfo>& claim_registry();
/// Throws std::invalid_argument for unknown ids.
const ClaimInfo& claim_info(const std::string& id);

struct ClaimInstance {
  RingPtr ring;
  std::optional<FPModule> module;
  IdealPtr ideal;
};

struct VerificationReport {
  std::string claim;
  std::string instance;
  /// "pass", "fail" or "inconclusive".
  std::string verdict;
  std::vector<Check> checks;
  Json quantities = Json::object();
  /// Unmet hypothesis or exhausted budget, for inconclusive verdicts.
  std::string error;
};

VerificationReport verify(const std::string& claim, const ClaimInstance& instance,
                          const Options& options = {});

}  // namespace dualhs
