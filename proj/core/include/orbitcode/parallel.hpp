#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace orbitcode {

inline int default_thread_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(index) for every index in [0, count), distributing indices over a
// worker pool via an atomic counter. Callers keep results deterministic by
// writing only to per-index slots and reducing sequentially afterwards.
// threads <= 0 selects default_thread_count().
inline void parallel_for(std::uint64_t count, int threads,
                         const std::function<void(std::uint64_t)>& fn) {
    if (count == 0) return;
    if (threads <= 0) threads = default_thread_count();
    std::uint64_t workers = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), count);
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&] {
        for (;;) {
            std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(count, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::uint64_t t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace orbitcode
