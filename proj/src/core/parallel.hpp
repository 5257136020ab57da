#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cpd {

/// Runs fn(i) for i in [0, count). Work items must write only to their own
/// slots; reductions happen after the join so results do not depend on the
/// worker count. The first exception thrown by any item is rethrown.
template <typename F>
void parallel_for(long count, int workers, F&& fn) {
    if (count <= 0) return;
    if (workers <= 1 || count == 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto drain = [&] {
        for (;;) {
            long i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int spawn = workers - 1;
    if (spawn > count - 1) spawn = static_cast<int>(count - 1);
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int w = 0; w < spawn; ++w) pool.emplace_back(drain);
    drain();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

inline int default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace cpd
