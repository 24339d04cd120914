#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace selnet {

inline unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Runs fn(i) for i in [0, count) on up to worker_count() threads. Work items
// must be independent; merging results deterministically is the caller's job
// (typically by writing into a preallocated slot per index).
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn, unsigned max_threads = 0) {
    unsigned threads = max_threads == 0 ? worker_count() : std::min(worker_count(), max_threads);
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    std::size_t chunk = std::max<std::size_t>(1, count / (threads * 8));
    auto body = [&] {
        for (;;) {
            std::size_t begin = cursor.fetch_add(chunk);
            if (begin >= count) return;
            std::size_t end = std::min(count, begin + chunk);
            for (std::size_t i = begin; i < end; ++i) fn(i);
        }
    };
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
}

} // namespace selnet
