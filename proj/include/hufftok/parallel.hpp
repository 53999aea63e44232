#pragma once

#include <cstddef>
#include <functional>

namespace hufftok {

// Worker count: HUFFTOK_THREADS when set (minimum 1), all cores otherwise.
unsigned worker_count();

// Runs fn(chunk_index, begin, end) over [0, count) split into contiguous
// chunks, one per worker. Runs inline when count is small or one worker.
void parallel_chunks(size_t count,
                     const std::function<void(unsigned, size_t, size_t)>& fn);

}  // namespace hufftok
