#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "heckelab/real.hpp"

namespace heckelab {

inline int default_thread_count() {
    if (const char* env = std::getenv("HECKELAB_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

// Parallel map over [0, n). Tasks write into caller-owned slots by index, so
// any reduction done afterwards in index order is deterministic regardless of
// thread count. Worker threads inherit the caller's working precision.
template <class F>
void parallel_for(std::size_t n, int threads, F&& body) {
    if (threads <= 0) threads = default_thread_count();
    if (threads == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next(0);
    mpfr_prec_t prec = WorkingPrecision::get();
    std::exception_ptr err;
    std::mutex err_mutex;
    auto worker = [&]() {
        WorkingPrecision guard(prec);
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mutex);
                if (!err) err = std::current_exception();
                break;
            }
        }
    };
    std::vector<std::thread> pool;
    int nt = (int)std::min<std::size_t>((std::size_t)threads, n);
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

} // namespace heckelab
