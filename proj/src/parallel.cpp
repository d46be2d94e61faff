#include "fractal_tutte/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace fractal_tutte {

std::size_t worker_count() {
  if (const char* env = std::getenv("FRACTAL_TUTTE_THREADS")) {
    try {
      long requested = std::stol(env);
      if (requested >= 1) return static_cast<std::size_t>(requested);
    } catch (const std::exception&) {
      // Ignore unparsable values and fall through to the hardware default.
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void run_tasks(std::vector<std::function<void()>> tasks) {
  std::size_t workers = std::min(worker_count(), tasks.size());
  if (workers <= 1) {
    for (auto& task : tasks) task();
    return;
  }

  std::mutex mutex;
  std::size_t next = 0;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      std::size_t index;
      {
        std::lock_guard lock(mutex);
        if (next == tasks.size()) return;
        index = next++;
      }
      try {
        tasks[index]();
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t i = 0; i < workers; ++i) threads.emplace_back(worker);
  for (auto& thread : threads) thread.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::size_t parallel_chunks(std::size_t total,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  std::size_t chunks = std::max<std::size_t>(1, std::min(worker_count(), total));
  std::vector<std::function<void()>> tasks;
  tasks.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t begin = total * c / chunks;
    std::size_t end = total * (c + 1) / chunks;
    tasks.emplace_back([&body, c, begin, end] { body(c, begin, end); });
  }
  run_tasks(std::move(tasks));
  return chunks;
}

}  // namespace fractal_tutte
