#include "becscat/error.hpp"

namespace becscat {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_config: return "invalid-config";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::degenerate_profile: return "degenerate-profile";
    case ErrorKind::unsupported_regime: return "unsupported-regime";
    case ErrorKind::truncated_support: return "truncated-support";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::non_convergence: return "non-convergence";
    case ErrorKind::insufficient_data: return "insufficient-data";
    case ErrorKind::file_error: return "file-error";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace becscat
