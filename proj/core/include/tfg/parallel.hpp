#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace tfg {

/// Worker count: TFG_WORKERS env override, else hardware concurrency.
int worker_count();

/// Splits [begin, end) into chunks, evaluates fn(lo, hi) -> R on a small
/// thread pool, and folds the chunk results *in chunk order*, so the outcome
/// does not depend on scheduling.
template <typename R, typename ChunkFn, typename CombineFn>
R parallel_chunks(int64_t begin, int64_t end, R init, ChunkFn fn, CombineFn combine) {
  int64_t total = end - begin;
  if (total <= 0) return init;
  int workers = worker_count();
  int64_t min_chunk = 4096;
  int64_t chunks = std::min<int64_t>(workers * 4, (total + min_chunk - 1) / min_chunk);
  if (chunks <= 1 || workers <= 1) {
    return combine(init, fn(begin, end));
  }
  int64_t step = (total + chunks - 1) / chunks;
  std::vector<R> results(static_cast<size_t>(chunks));
  std::vector<std::thread> pool;
  std::atomic<int64_t> next{0};
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&]() {
      while (true) {
        int64_t c = next.fetch_add(1);
        if (c >= chunks) return;
        int64_t lo = begin + c * step;
        int64_t hi = std::min(end, lo + step);
        results[static_cast<size_t>(c)] = fn(lo, hi);
      }
    });
  }
  for (auto& th : pool) th.join();
  R acc = init;
  for (auto& r : results) acc = combine(acc, r);
  return acc;
}

}  // namespace tfg
