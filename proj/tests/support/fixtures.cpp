#include "fixtures.hpp"

#include <map>
#include <mutex>

namespace fixture {

const becscat::GroundState& converged_state(double gamma) {
  static std::mutex mutex;
  static std::map<double, becscat::GroundState> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(gamma);
  if (it == cache.end()) {
    auto state = becscat::solve_ground_state(gamma, becscat::default_grid(gamma), {});
    it = cache.emplace(gamma, std::move(state)).first;
  }
  return it->second;
}

}  // namespace fixture
