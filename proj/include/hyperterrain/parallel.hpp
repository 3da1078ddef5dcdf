#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace hyperterrain {

// Thread count resolution: explicit value > HYPERTERRAIN_THREADS > hardware.
int default_thread_count();
int resolve_threads(int requested);

// Splits [0, count) into at most `threads` contiguous chunks and runs
// fn(begin, end) for each chunk on its own thread. fn must only touch
// chunk-local state; callers merge per-chunk results in index order, which
// keeps every reduction deterministic regardless of scheduling.
void parallel_chunks(std::int64_t count, int threads,
                     const std::function<void(int chunk, std::int64_t begin, std::int64_t end)>& fn);

}  // namespace hyperterrain
