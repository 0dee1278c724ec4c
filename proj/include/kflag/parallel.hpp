#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace kflag {

/// Run body(0..count-1) on up to `jobs` threads.  Callers own determinism:
/// write results into per-index slots and merge in index order afterwards.
template <typename F>
void parallel_for(std::size_t count, int jobs, F&& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
  };
  std::vector<std::thread> pool;
  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace kflag
