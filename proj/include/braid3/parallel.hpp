#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace braid3 {

/// Worker cap: BRAID3_WORKERS env var, with 0 or unset meaning the hardware
/// concurrency. Always at least 1.
inline std::size_t worker_count() {
  std::size_t n = 0;
  if (const char* env = std::getenv("BRAID3_WORKERS")) n = std::strtoul(env, nullptr, 10);
  if (n == 0) n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Runs body(i) for i in [0, count) across worker_count() threads. Callers
/// write results into index-addressed slots, so the merged output does not
/// depend on the schedule.
template <class Body>
void parallel_for(std::size_t count, const Body& body) {
  const std::size_t workers = std::min(worker_count(), count == 0 ? std::size_t{1} : count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace braid3
