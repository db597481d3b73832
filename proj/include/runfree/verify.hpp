#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "runfree/oracle.hpp"

namespace runfree {

enum class GridPreset { Small, Full };

GridPreset grid_preset_from_name(const std::string& name);

struct VerifyRecord {
  std::string theorem;
  std::string params;
  std::string formula;  // decimal, empty when skipped
  std::string oracle;
  bool match = false;
  bool skipped = false;
  std::string note;
};

struct VerificationReport {
  std::string grid;
  std::vector<VerifyRecord> results;
  std::size_t total = 0;
  std::size_t mismatches = 0;
  std::size_t skipped = 0;
};

/// Identifiers accepted by run_verification.  The "-as-printed" variants
/// evaluate formulas exactly as displayed in their source, including the
/// known-suspect ones, so real transcription errors stay detectable.
const std::vector<std::string>& known_checks();

/// Formula-vs-oracle comparison over the preset grid.  `filter` empty runs
/// every check.  Budget-exceeded instances are recorded as skipped.
VerificationReport run_verification(const std::vector<std::string>& filter,
                                    GridPreset preset,
                                    const OracleOptions& opts = {});

nlohmann::ordered_json report_to_json(const VerificationReport& report);

}  // namespace runfree
