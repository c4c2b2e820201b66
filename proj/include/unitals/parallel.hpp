#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace unitals {

/// Maps a --threads style request to a concrete worker count (>= 1);
/// nonpositive means "use the hardware concurrency".
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs worker(t) for t in [0, count) on separate threads. Workers own their
/// result slots; callers merge deterministically afterwards.
template <class Worker>
void run_workers(int count, Worker worker) {
  if (count <= 1) {
    worker(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker, t);
  for (auto& th : pool) th.join();
}

}  // namespace unitals
