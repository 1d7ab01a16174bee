#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace twinasset {

/// Number of worker threads to use for a request of `threads` (0 = auto).
inline unsigned resolve_threads(unsigned threads) noexcept {
    if (threads != 0) {
        return threads;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs task(0) .. task(n_tasks - 1) on up to `threads` workers. Tasks are
/// handed out dynamically, so a task must only write to state it owns.
/// The first exception thrown by any task is rethrown on the caller.
template <class Task>
void parallel_for(std::size_t n_tasks, unsigned threads, Task&& task) {
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(n_tasks, 1)));
    if (workers <= 1) {
        for (std::size_t k = 0; k < n_tasks; ++k) {
            task(k);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t k = next.fetch_add(1); k < n_tasks; k = next.fetch_add(1)) {
            try {
                task(k);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(n_tasks);
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace twinasset
