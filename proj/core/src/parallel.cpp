#include "becscat/parallel.hpp"

#include <cstdlib>
#include <string>

namespace becscat {

std::size_t worker_count() {
  if (const char* env = std::getenv(kWorkerEnvVar)) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace becscat
