#include "antibch/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace antibch {

namespace {
std::atomic<unsigned> g_threads{0};
}

unsigned thread_count() {
  unsigned n = g_threads.load();
  if (n) return n;
  if (const char* env = std::getenv("ANTIBCH_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return 1;
}

void set_thread_count(unsigned n) { g_threads.store(std::min(n, 256u)); }

void parallel_tasks(std::uint64_t tasks, const std::function<void(std::uint64_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(thread_count(), tasks));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < tasks; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto run = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= tasks) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        next.store(tasks);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace antibch
