#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace latsens {

// Worker count for `requested` (0 = available parallelism).
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Deterministic parallel reduction over [begin, end).
//
// The chunk grid depends only on (begin, end, chunk_size).  Workers claim
// chunk indices from an atomic counter, each partial result lands in the
// slot for its chunk, and the fold runs left to right over the slots after
// all workers join.  As long as `merge` is associative the result is
// identical for every worker count, including 1.
template <class Result, class ChunkFn, class MergeFn>
Result chunked_reduce(uint64_t begin, uint64_t end, uint64_t chunk_size,
                      int threads, Result init, ChunkFn chunk_fn,
                      MergeFn merge) {
  if (begin >= end) return init;
  if (chunk_size == 0) chunk_size = 1;
  const uint64_t n_chunks = (end - begin + chunk_size - 1) / chunk_size;
  int workers = resolve_threads(threads);
  if (static_cast<uint64_t>(workers) > n_chunks)
    workers = static_cast<int>(n_chunks);

  std::vector<std::optional<Result>> partials(n_chunks);
  std::atomic<uint64_t> next{0};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};

  auto run = [&]() {
    for (;;) {
      const uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n_chunks || failed.load(std::memory_order_relaxed)) return;
      const uint64_t lo = begin + i * chunk_size;
      const uint64_t hi = std::min(end, lo + chunk_size);
      try {
        partials[i].emplace(chunk_fn(lo, hi));
      } catch (...) {
        if (!failed.exchange(true)) first_error = std::current_exception();
        return;
      }
    }
  };

  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) std::rethrow_exception(first_error);

  Result acc = std::move(init);
  for (uint64_t i = 0; i < n_chunks; ++i) merge(acc, std::move(*partials[i]));
  return acc;
}

}  // namespace latsens
