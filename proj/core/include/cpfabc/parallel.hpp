#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cpfabc {

/// Resolves a requested worker count; 0 means "use the hardware".
inline unsigned effective_workers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, n). Work is claimed dynamically, so the schedule
/// is nondeterministic but results must be written to per-index slots.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  workers = effective_workers(workers);
  if (n == 0) return;
  if (workers <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

/// Splits [0, n_items) into fixed-size chunks, computes each chunk into a
/// private scratch value and merges the scratches strictly in chunk order.
/// Because chunk boundaries and the merge order are independent of the
/// worker count, floating-point reductions give bit-identical results for
/// any number of workers.
template <typename MakeScratch, typename Compute, typename Merge>
void parallel_ordered_chunks(std::size_t n_items, std::size_t chunk_size, unsigned workers,
                             MakeScratch&& make_scratch, Compute&& compute, Merge&& merge) {
  workers = effective_workers(workers);
  if (n_items == 0) return;
  if (chunk_size == 0) chunk_size = 1;
  const std::size_t n_chunks = (n_items + chunk_size - 1) / chunk_size;

  if (workers <= 1 || n_chunks == 1) {
    auto scratch = make_scratch();
    for (std::size_t c = 0; c < n_chunks; ++c) {
      const std::size_t begin = c * chunk_size;
      const std::size_t end = std::min(n_items, begin + chunk_size);
      compute(begin, end, scratch);
      merge(scratch);
    }
    return;
  }

  std::atomic<std::size_t> next_chunk{0};
  std::size_t next_merge = 0;
  std::mutex merge_mutex;
  std::condition_variable merge_cv;
  std::exception_ptr error;

  auto body = [&] {
    auto scratch = make_scratch();
    for (;;) {
      const std::size_t c = next_chunk.fetch_add(1);
      if (c >= n_chunks) return;
      const std::size_t begin = c * chunk_size;
      const std::size_t end = std::min(n_items, begin + chunk_size);
      try {
        compute(begin, end, scratch);
        std::unique_lock<std::mutex> lock(merge_mutex);
        merge_cv.wait(lock, [&] { return next_merge == c || error; });
        if (error) return;
        merge(scratch);
        ++next_merge;
        merge_cv.notify_all();
      } catch (...) {
        std::lock_guard<std::mutex> lock(merge_mutex);
        if (!error) error = std::current_exception();
        next_chunk.store(n_chunks);
        merge_cv.notify_all();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, n_chunks));
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace cpfabc
