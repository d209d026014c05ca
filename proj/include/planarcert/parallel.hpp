#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace planarcert {

// Worker cap: CERT_THREADS when set, hardware concurrency otherwise.
inline int worker_count() {
    if (const char* env = std::getenv("CERT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1)
            return std::min(v, 256);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

// Runs fn(i) for every i in [0, total) on a small pool. Each index must write
// only into its own result slot so the merged output is deterministic and
// independent of the worker count.
template <typename Fn>
void parallel_for_index(long long total, Fn&& fn) {
    if (total <= 0)
        return;
    int workers = static_cast<int>(std::min<long long>(worker_count(), total));
    if (workers <= 1) {
        for (long long i = 0; i < total; ++i)
            fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            long long i = next.fetch_add(1);
            if (i >= total || failed.load())
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true))
                    first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back(work);
    for (auto& th : pool)
        th.join();
    if (failed.load())
        std::rethrow_exception(first_error);
}

} // namespace planarcert
