#pragma once

// Minimal indexed parallel-for. Work items are claimed from an atomic
// counter; callers assemble results by index so output never depends on
// scheduling. The first exception thrown by a worker is rethrown after join.

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace prodsum {

inline unsigned default_thread_count() noexcept {
  unsigned n = std::thread::hardware_concurrency();
  return n ? n : 1;
}

template <typename Fn>
void parallel_for_index(std::uint64_t count, unsigned threads, Fn fn) {
  if (threads <= 1 || count <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto worker = [&] {
    for (;;) {
      std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        next.store(count, std::memory_order_relaxed);
        return;
      }
    }
  };
  unsigned n = threads < count ? threads : static_cast<unsigned>(count);
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace prodsum
