#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace imkit {

/// Number of worker threads to use for sharded scans. Controlled by the
/// IMKIT_THREADS environment variable; 0 or unset means auto-detect.
inline unsigned worker_count() {
  if (const char* env = std::getenv("IMKIT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, total) into contiguous shards and runs fn(begin, end, shard)
// on each. Shard boundaries depend only on `total` and the worker count,
// so any merge that respects shard order is deterministic.
template <class Fn>
void parallel_shards(std::uint64_t total, Fn&& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || total < 1024) {
    fn(std::uint64_t{0}, total, 0u);
    return;
  }
  std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::thread> threads;
  for (unsigned s = 0; s < workers; ++s) {
    std::uint64_t begin = s * chunk;
    if (begin >= total) break;
    std::uint64_t end = std::min(total, begin + chunk);
    threads.emplace_back([&fn, begin, end, s] { fn(begin, end, s); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace imkit
