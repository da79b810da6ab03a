#pragma once

#include <cstdint>
#include <functional>

namespace bprttd {

// Runs fn(begin, end, block_index) over [0, n) split into fixed-size blocks.
// Block boundaries depend only on n and block_size, never on the thread
// count, so per-block partial results merged in block order are identical for
// any number of workers.
void parallel_for_blocks(std::int64_t n, int nthreads, std::int64_t block_size,
                         const std::function<void(std::int64_t, std::int64_t,
                                                  std::int64_t)>& fn);

std::int64_t block_count(std::int64_t n, std::int64_t block_size);

int hardware_threads();

} // namespace bprttd
