#include "slab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace slab {

namespace {
int g_jobs = 0;
}

int default_jobs() {
  if (g_jobs > 0) return g_jobs;
  if (const char* env = std::getenv("SPRINGER_LAB_JOBS")) {
    int j = std::atoi(env);
    if (j > 0) return j;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

void set_default_jobs(int jobs) { g_jobs = jobs; }

void parallel_chunks(size_t count,
                     const std::function<void(size_t, size_t)>& fn, int jobs) {
  if (jobs <= 0) jobs = default_jobs();
  if (jobs == 1 || count < 4096) {
    if (count) fn(0, count);
    return;
  }
  size_t chunk = std::max<size_t>(1024, count / (size_t(jobs) * 8));
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t begin = next.fetch_add(chunk);
      if (begin >= count) break;
      fn(begin, std::min(begin + chunk, count));
    }
  };
  std::vector<std::thread> threads;
  for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();
}

}  // namespace slab
