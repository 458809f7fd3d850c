#pragma once

// Property-verification suite behind `mre verify`.
//
// Each property draws random inputs, serializes them to JSON and evaluates a
// non-negative residual from the JSON form, so a failing sample written to the
// report replays bit-for-bit with `mre verify --replay FILE`.

#include <mre/json_io.hpp>
#include <mre_cli/config.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mre::cli {

struct VerifyConfig {
  RunConfig run;
  /// Run only this property (empty: all).
  std::string only;
  /// Override every property's sample count (0: defaults).
  int samples = 0;
  /// Harness self-test: every threshold becomes negative, so the first
  /// sample of each property fails.
  bool break_tolerance = false;
};

struct PropertyInfo {
  std::string name;
  std::string description;
  int default_samples;
  double threshold;
};

const std::vector<PropertyInfo>& verify_properties();

struct PropertyResult {
  std::string property;
  int samples = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool passed = true;
  /// First failing sample, ready for --replay.
  std::optional<Json> failing_sample;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<PropertyResult> results;

  bool passed() const;
  Json to_json() const;
};

/// Throws InputError when `only` names no property.
VerifyReport run_verify(const VerifyConfig& cfg);

/// Re-evaluates a failing sample produced by run_verify.
PropertyResult replay_sample(const Json& sample);

}  // namespace mre::cli
