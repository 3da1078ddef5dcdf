#include "hyperterrain/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace hyperterrain {

int default_thread_count() {
    if (const char* env = std::getenv("HYPERTERRAIN_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t >= 1) return t;
        } catch (...) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int resolve_threads(int requested) { return requested >= 1 ? requested : default_thread_count(); }

void parallel_chunks(std::int64_t count, int threads,
                     const std::function<void(int, std::int64_t, std::int64_t)>& fn) {
    threads = resolve_threads(threads);
    if (count <= 0) return;
    const int chunks = static_cast<int>(std::min<std::int64_t>(threads, count));
    if (chunks == 1) {
        fn(0, 0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    const std::int64_t step = (count + chunks - 1) / chunks;
    for (int c = 0; c < chunks; ++c) {
        const std::int64_t begin = c * step;
        const std::int64_t end = std::min<std::int64_t>(count, begin + step);
        if (begin >= end) break;
        pool.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace hyperterrain
