#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace degpow {

/// Environment variable holding the default worker count.
inline constexpr const char* workers_env_var = "DEGPOW_WORKERS";

/// Worker count: `requested` when positive, else $DEGPOW_WORKERS, else
/// hardware concurrency (at least 1).
int resolve_workers(int requested);

/// Runs task(i) for every i in [0, count) across `workers` threads and
/// returns the results in index order. Chunk i is always handled by the same
/// function call, so the merged output does not depend on the worker count.
template <typename Result, typename Task>
std::vector<Result> run_indexed(std::size_t count, int workers, Task task) {
  std::vector<Result> results(count);
  const auto threads = static_cast<std::size_t>(
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = task(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) results[i] = task(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

} // namespace degpow
