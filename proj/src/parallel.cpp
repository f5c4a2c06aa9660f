#include "tcmis/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tcmis {

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for(std::int64_t num_tasks, int workers,
                  const std::function<void(std::int64_t)>& task) {
  if (num_tasks <= 0) return;
  int pool = std::min<std::int64_t>(resolve_workers(workers), num_tasks);
  if (pool <= 1) {
    for (std::int64_t i = 0; i < num_tasks; ++i) task(i);
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= num_tasks) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(num_tasks, std::memory_order_relaxed);
        return;
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(pool - 1);
  for (int t = 1; t < pool; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

void parallel_chunks(std::int64_t count, int workers,
                     const std::function<void(std::int64_t, std::int64_t)>& body) {
  if (count <= 0) return;
  constexpr std::int64_t kChunk = 8192;
  std::int64_t num_chunks = (count + kChunk - 1) / kChunk;
  parallel_for(num_chunks, workers, [&](std::int64_t c) {
    std::int64_t lo = c * kChunk;
    body(lo, std::min(count, lo + kChunk));
  });
}

}  // namespace tcmis
