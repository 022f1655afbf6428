#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace locpoly {

// Worker cap: LOCPOLY_THREADS when set, hardware concurrency otherwise.
inline int max_threads_from_env() {
    if (const char* s = std::getenv("LOCPOLY_THREADS")) {
        const int v = std::atoi(s);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs fn(i) for i in [0, count) over a static block partition.  fn(i) must
// only write state owned by index i, so results cannot depend on the worker
// count or scheduling.
template <class Fn>
void parallel_for_index(std::size_t count, Fn&& fn, int max_threads = -1) {
    if (count == 0) return;
    int threads = max_threads > 0 ? max_threads : max_threads_from_env();
    if (static_cast<std::size_t>(threads) > count) threads = static_cast<int>(count);

    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::exception_ptr first_error;
    std::mutex error_mutex;
    const std::size_t block = (count + static_cast<std::size_t>(threads) - 1) /
                              static_cast<std::size_t>(threads);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        const std::size_t begin = static_cast<std::size_t>(w) * block;
        const std::size_t end = std::min(count, begin + block);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace locpoly
