#include "hufftok/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hufftok {

unsigned worker_count() {
  if (const char* env = std::getenv("HUFFTOK_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void parallel_chunks(size_t count,
                     const std::function<void(unsigned, size_t, size_t)>& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<size_t>(worker_count(), std::max<size_t>(count, 1)));
  if (workers <= 1 || count < 2048) {
    fn(0, 0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const size_t step = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const size_t begin = std::min(count, w * step);
    const size_t end = std::min(count, begin + step);
    if (begin == end) break;
    pool.emplace_back([&, w, begin, end] { fn(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace hufftok
