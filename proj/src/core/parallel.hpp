#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace egg {

// Worker count: explicit request, else EGG_METRICS_THREADS, else hardware threads
inline int worker_count(int requested) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (requested > 0) return requested;
    if (const char* env = std::getenv("EGG_METRICS_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return std::min(v, std::max(hw, 1) * 4);
        } catch (...) {
        }
    }
    return hw;
}

// Runs body(i) for i in [0, count). Results must be written to per-index slots so
// the output does not depend on scheduling.
template <class Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
    workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace egg
