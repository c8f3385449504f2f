#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace curveflow::parallel {

inline std::atomic<int>& thread_setting() {
    static std::atomic<int> n{0};  // 0 = use hardware concurrency
    return n;
}

inline void set_num_threads(int n) { thread_setting().store(n < 0 ? 0 : n); }

inline int num_threads() {
    int n = thread_setting().load();
    if (n > 0) return n;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(y) for y in [0, height). Rows are split into contiguous blocks,
/// one per worker; every pixel is computed independently, so the output is
/// bit-identical for any thread count.
template <typename Fn>
void for_rows(int height, Fn&& fn) {
    int workers = num_threads();
    if (workers > height) workers = height;
    if (workers <= 1 || height < 16) {
        for (int y = 0; y < height; ++y) fn(y);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    int chunk = (height + workers - 1) / workers;
    for (int w = 1; w < workers; ++w) {
        int y0 = w * chunk;
        int y1 = std::min(height, y0 + chunk);
        if (y0 >= y1) break;
        pool.emplace_back([&fn, y0, y1] {
            for (int y = y0; y < y1; ++y) fn(y);
        });
    }
    for (int y = 0; y < std::min(chunk, height); ++y) fn(y);
    for (auto& t : pool) t.join();
}

}  // namespace curveflow::parallel
