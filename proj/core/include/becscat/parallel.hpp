#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace becscat {

inline constexpr const char* kWorkerEnvVar = "BECSCAT_WORKERS";

/// BECSCAT_WORKERS when set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
std::size_t worker_count();

/// Evaluates fn(i) for i in [0, n) on up to `workers` threads and returns the
/// results in index order. If any call throws, the exception from the lowest
/// failing index is rethrown after all workers finish.
template <typename Fn>
auto parallel_map(std::size_t n, Fn&& fn, std::size_t workers = worker_count())
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<std::optional<Result>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const std::size_t threads = std::min(workers == 0 ? std::size_t{1} : workers, n);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Result> out;
  out.reserve(n);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace becscat
