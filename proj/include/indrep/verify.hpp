#pragma once

// Batch verification: runs every invariant of the toolkit with configured
// tolerances and emits a machine-readable report. All randomness flows from
// per-check streams derived from one seed, so identical configurations
// reproduce identical residuals byte for byte.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indrep/function_space.hpp"
#include "indrep/spectral.hpp"

namespace indrep {

struct ProbeFamilyConfig {
  int count = 10;
  double width_min = 1.0;
  double width_max = 1.4;
  double center_radius = 0.8;
  int m_max = 3;

  void validate() const;
};

struct RunConfig {
  GridSpec grid;
  std::uint64_t seed = 1;
  std::map<std::string, double> tolerance_overrides;
  ProbeFamilyConfig probes;
  WavepacketSpec packet;
  std::string out_dir = "out";
  /// When set, run exactly these checks (possibly none), in registry order.
  std::optional<std::vector<std::string>> checks;

  void validate() const;
};

struct CheckRecord {
  std::string check_id;
  std::string paper_anchor;
  double tolerance;
  double residual;
  bool pass;
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  std::uint64_t seed = 0;
  std::string config_digest;
  int total = 0;
  int passed = 0;
  int failed = 0;

  bool all_passed() const { return failed == 0; }
};

/// IDs of every registered check, in the fixed execution order.
std::vector<std::string> registered_check_ids();

/// Default tolerance of a check; throws ConfigError for unknown ids.
double default_tolerance(const std::string& check_id);

/// Anchor label of a check; throws ConfigError for unknown ids.
std::string check_anchor(const std::string& check_id);

/// Runs the configured checks. Throws ConfigError on invalid configuration
/// (including unknown check ids or non-positive tolerance overrides).
VerificationReport run_verification(const RunConfig& config);

/// Stable content hash of the canonicalized configuration.
std::string config_digest(const RunConfig& config);

/// JSON text of the report with stable key order; byte-identical for
/// identical configurations.
std::string report_to_json(const VerificationReport& report);

/// Parse a configuration from JSON text; unknown keys are rejected.
RunConfig parse_config(const std::string& json_text);

RunConfig load_config_file(const std::string& path);

}  // namespace indrep
