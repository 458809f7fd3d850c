#pragma once

#include <cstdint>
#include <exception>
#include <string>

namespace mre::cli {

enum class Format { Json, Table };

/// Flags shared by every subcommand. Negative or zero counts mean "use the
/// library default".
struct RunConfig {
  std::uint64_t seed = 0;
  int restarts = -1;
  int m_max = 0;
  /// Convergence tolerance of the local optimizer.
  double tol = 1e-8;
  Format format = Format::Json;
  std::string output;
};

/// Exit statuses of the mre tool.
enum ExitCode : int {
  kOk = 0,
  kPropertyViolation = 1,
  kParseError = 2,
  kNonPhysical = 3,
  kDomainError = 4,
  kInternalError = 5,
};

/// Maps a library exception to its exit status.
int exit_code_for(const std::exception& e);

/// printf("%.12g"), the number format of every CSV cell and table entry.
std::string format_number(double x);

}  // namespace mre::cli
