#include "lltlab/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace llt {

namespace {
std::atomic<int> g_default_threads{0};
}

int default_thread_count() {
  const int set = g_default_threads.load();
  if (set > 0) return set;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_default_thread_count(int threads) { g_default_threads.store(threads); }

void parallel_chunks(std::size_t total, int threads,
                     const std::function<void(int, std::size_t, std::size_t)>& fn) {
  if (threads < 1) threads = 1;
  if (threads == 1 || total <= 1) {
    fn(0, 0, total);
    return;
  }
  const std::size_t n_workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), total);
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (std::size_t w = 0; w < n_workers; ++w) {
    const std::size_t lo = total * w / n_workers;
    const std::size_t hi = total * (w + 1) / n_workers;
    pool.emplace_back([&, w, lo, hi] {
      try {
        fn(static_cast<int>(w), lo, hi);
      } catch (...) {
        std::lock_guard<std::mutex> g(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace llt
