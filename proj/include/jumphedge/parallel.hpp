#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "jumphedge/errors.hpp"

namespace jumphedge::detail {

// Runs body(i) for i in [0, n) over a static chunking of worker threads.
// Results must be written by index, so the outcome is independent of the
// thread count. On failure the smallest recorded failing index is reported.
template <class F>
void parallel_for_index(std::size_t n, unsigned threads, F&& body) {
    unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (n < 2 * static_cast<std::size_t>(workers)) workers = 1;

    std::atomic<bool> failed{false};
    std::mutex mu;
    std::size_t fail_index = std::numeric_limits<std::size_t>::max();
    std::string fail_message;
    bool fail_is_truncation = false;

    auto run_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (failed.load(std::memory_order_relaxed)) return;
            try {
                body(i);
            } catch (const TruncationFailure& e) {
                std::lock_guard lock(mu);
                if (i < fail_index) {
                    fail_index = i;
                    fail_message = e.what();
                    fail_is_truncation = true;
                }
                failed.store(true, std::memory_order_relaxed);
                return;
            } catch (const std::exception& e) {
                std::lock_guard lock(mu);
                if (i < fail_index) {
                    fail_index = i;
                    fail_message = e.what();
                    fail_is_truncation = false;
                }
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    if (workers == 1) {
        run_range(0, n);
    } else {
        const std::size_t chunk = (n + workers - 1) / workers;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t lo = std::min(n, static_cast<std::size_t>(w) * chunk);
            const std::size_t hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    if (failed.load()) {
        const std::string msg = "path " + std::to_string(fail_index) + ": " + fail_message;
        if (fail_is_truncation) throw TruncationFailure(msg, 0);
        throw std::runtime_error(msg);
    }
}

} // namespace jumphedge::detail
