#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cremona::detail {

/// Evaluates fn(i) for i in [0, count) on up to `threads` workers and returns
/// the results in index order, so the output never depends on scheduling.
/// The first exception thrown by any task is rethrown on the caller.
template <typename Result, typename Fn>
std::vector<Result> ordered_parallel_map(std::size_t count, unsigned threads, Fn&& fn) {
    std::vector<Result> results(count);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        results[i] = fn(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace cremona::detail
