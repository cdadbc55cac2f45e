#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace jamcov {

// 0 means "use the hardware default".
unsigned resolve_workers(unsigned workers);

// Runs fn(i) for every i in [0, n). Work items must write to disjoint slots;
// under that contract results never depend on the worker count or on which
// thread picked up which block.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
    const unsigned w = resolve_workers(workers);
    if (n == 0) {
        return;
    }
    if (w <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }

    // Block scheduling keeps the atomic counter off the per-item hot path.
    const std::size_t block = std::max<std::size_t>(1, n / (static_cast<std::size_t>(w) * 8));
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto body = [&]() {
        try {
            for (;;) {
                const std::size_t begin = next.fetch_add(block, std::memory_order_relaxed);
                if (begin >= n) {
                    return;
                }
                const std::size_t end = std::min(n, begin + block);
                for (std::size_t i = begin; i < end; ++i) {
                    fn(i);
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) {
                first_error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(w - 1);
    for (unsigned t = 1; t < w; ++t) {
        threads.emplace_back(body);
    }
    body();
    for (auto& t : threads) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

}  // namespace jamcov
