#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace toriq {

// Worker count: TORIQ_THREADS if set and positive, otherwise the hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("TORIQ_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t > 0) return static_cast<unsigned>(t);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(i) for i in [0, n); results land at their index, so output order is fixed.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  unsigned workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next++;
        if (i >= n || failed) return;
        try {
          out[i] = fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace toriq
