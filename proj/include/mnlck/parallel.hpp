/**
 * Minimal deterministic work sharing for per-mode loops.
 *
 * Work is split into indexed chunks that threads claim atomically; every
 * chunk computes into its own slot and results are reduced in index order,
 * so the outcome is independent of the thread count and schedule.  The
 * thread count honours the MNLCK_THREADS environment variable.
 */
#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace mnlck {

/** Worker count: MNLCK_THREADS if set (clamped to >= 1), else the hardware. */
inline unsigned configured_threads() {
  if (const char* env = std::getenv("MNLCK_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) return static_cast<unsigned>(parsed);
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/**
 * Run fn(chunk_index) for every index in [0, chunk_count), spread over up to
 * `threads` workers.  fn must only touch state owned by its chunk index.
 */
inline void parallel_chunks(int chunk_count, const std::function<void(int)>& fn,
                            unsigned threads = configured_threads()) {
  if (chunk_count <= 0) return;
  const unsigned workers =
      std::min<unsigned>(threads, static_cast<unsigned>(chunk_count));
  if (workers <= 1) {
    for (int i = 0; i < chunk_count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < chunk_count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace mnlck
