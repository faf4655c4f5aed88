#pragma once

#include <string>

namespace becscat {

/// Shortest-safe round-trip text for a double: printf "%.17g".
std::string format_number(double value);

}  // namespace becscat
