#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mvcount {

/// Worker count: 0 means hardware concurrency.
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Calls fn(i) for i in [begin, end) across worker threads. Indices are
/// handed out in small chunks; the first exception is rethrown.
template <class Fn>
void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned threads,
                  Fn&& fn) {
  if (begin >= end) return;
  threads = std::min<std::uint64_t>(resolve_threads(threads), end - begin);
  if (threads <= 1) {
    for (std::uint64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  const std::uint64_t chunk =
      std::max<std::uint64_t>(1, (end - begin) / (16 * threads));
  std::atomic<std::uint64_t> next{begin};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (;;) {
        std::uint64_t lo = next.fetch_add(chunk);
        if (lo >= end) return;
        std::uint64_t hi = std::min(end, lo + chunk);
        for (std::uint64_t i = lo; i < hi; ++i) fn(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(end);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace mvcount
