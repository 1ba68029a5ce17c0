#include "setgraph/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace setgraph {

int default_jobs() {
  if (const char* env = std::getenv("SETGRAPH_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs > 0) return jobs;
    } catch (const std::exception&) {
    }
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void parallel_for(std::uint64_t count, int jobs, const std::function<void(std::uint64_t, int)>& body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) body(i, 0);
    return;
  }
  constexpr std::uint64_t kChunk = 1024;
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      while (!failed.load()) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= count) break;
        const std::uint64_t end = std::min(count, begin + kChunk);
        try {
          for (std::uint64_t i = begin; i < end; ++i) body(i, w);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace setgraph
