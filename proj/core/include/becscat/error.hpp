#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace becscat {

enum class ErrorKind {
  invalid_config,
  invalid_input,
  degenerate_profile,
  unsupported_regime,
  truncated_support,
  out_of_range,
  non_convergence,
  insufficient_data,
  file_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace becscat
