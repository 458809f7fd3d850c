#pragma once

// Parameter sweeps over the Werner, Bell-mixture and departure families,
// written as CSV with a fixed header and 12 significant digits.

#include <mre_cli/config.hpp>

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mre::cli {

enum class SweepFamily { Werner, BellMixture, Departure };

SweepFamily parse_family(std::string_view name);

struct SweepSpec {
  SweepFamily family = SweepFamily::Werner;
  double min = 0.0;
  double max = 1.0;
  int steps = 51;

  /// Full figure range: F and b_max over [1/2, 1], G over [0, 1], 51 points.
  static SweepSpec defaults(SweepFamily family);
};

/// Throws DomainError when min >= max, steps < 2, or the range leaves the
/// family's domain.
void validate(const SweepSpec& spec);

std::vector<std::string> sweep_header(SweepFamily family);

struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Every row of the Werner sweep runs its searches with cfg.seed, so rows do
/// not depend on each other or on evaluation order.
SweepTable run_sweep(const SweepSpec& spec, const RunConfig& cfg);

void write_csv(const SweepTable& table, std::ostream& out);

/// Row-wise orderings the figures show: MRE <= EF for Werner and Bell
/// mixtures, RE estimate <= searched MRE, mre_23 <= mre_14 and
/// avg_reduced_entropy_23 >= mre_23 for departure states. Returns one message
/// per violated row.
std::vector<std::string> check_orderings(const SweepSpec& spec, const SweepTable& table,
                                         double tol = 1e-4);

}  // namespace mre::cli
