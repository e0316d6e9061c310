#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace plethys::detail {

/// Worker count: PLETHYS_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
inline unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PLETHYS_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
    } catch (const std::exception&) {
    }
  }
  return hw;
}

/// Sums body(i) over [0, n) on up to worker_count() threads. Integer sums are
/// exact, so the result does not depend on scheduling.
template <class Body>
long parallel_count(std::size_t n, Body body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n / 64, 1));
  if (workers <= 1) {
    long total = 0;
    for (std::size_t i = 0; i < n; ++i) total += body(i);
    return total;
  }
  std::vector<long> partial(workers, 0);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) partial[w] += body(i);
    });
  }
  for (auto& t : threads) t.join();
  long total = 0;
  for (long p : partial) total += p;
  return total;
}

}  // namespace plethys::detail
