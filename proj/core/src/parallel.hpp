#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wsat::detail {

/// Runs f(i) for i in [0, count) on up to `threads` workers. Each index is
/// visited exactly once; callers write results into per-index slots, so the
/// outcome does not depend on scheduling.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& f) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  constexpr std::size_t kChunk = 16;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      while (true) {
        const auto begin = next.fetch_add(kChunk);
        if (begin >= count) return;
        const auto end = std::min(count, begin + kChunk);
        for (auto i = begin; i < end; ++i) f(i);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(count);
    }
  };
  {
    std::vector<std::jthread> pool;
    const auto n = std::min<std::size_t>(threads, (count + kChunk - 1) / kChunk);
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace wsat::detail
