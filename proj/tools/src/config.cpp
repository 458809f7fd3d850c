#include <mre/errors.hpp>
#include <mre_cli/config.hpp>

#include <cstdio>

namespace mre::cli {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return kParseError;
  if (dynamic_cast<const NormalizationError*>(&e) || dynamic_cast<const NonPhysicalError*>(&e) ||
      dynamic_cast<const CompletenessError*>(&e) || dynamic_cast<const DecompositionError*>(&e) ||
      dynamic_cast<const ParametrizationError*>(&e))
    return kNonPhysical;
  if (dynamic_cast<const DomainError*>(&e) || dynamic_cast<const RestrictionError*>(&e) ||
      dynamic_cast<const AnnihilatedBranchError*>(&e))
    return kDomainError;
  return kInternalError;
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace mre::cli
