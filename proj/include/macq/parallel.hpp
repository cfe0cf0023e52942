#pragma once

// Deterministic parallel map: each index is computed independently and the
// results come back in index order, so output never depends on thread count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace macq {

/// MACQ_THREADS if set and positive, else the hardware concurrency.
int default_thread_count();
/// 0 restores the default.
void set_thread_count(int n);
int thread_count();

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
    std::vector<T> out(count);
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

} // namespace macq
