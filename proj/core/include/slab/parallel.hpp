#pragma once

#include <cstddef>
#include <functional>

namespace slab {

// Worker cap: --jobs flag wins, then SPRINGER_LAB_JOBS, then hardware.
int default_jobs();
void set_default_jobs(int jobs);

// Chunked parallel loop over [0, count); fn(begin, end) per chunk. Runs
// inline when jobs == 1 or the range is tiny.
void parallel_chunks(size_t count,
                     const std::function<void(size_t, size_t)>& fn,
                     int jobs = 0);

}  // namespace slab
