#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace rectwalg {

/// Run `count` independent tasks on `jobs` workers; jobs <= 1 runs inline.
/// The first exception wins and is rethrown after all workers stop.
inline void parallel_run(size_t count, int jobs, const std::function<void(size_t)>& task) {
    if (jobs <= 1 || count <= 1) {
        for (size_t k = 0; k < count; ++k) task(k);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&]() {
        while (true) {
            size_t k = next.fetch_add(1);
            if (k >= count) return;
            try {
                task(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int width = jobs < static_cast<int>(count) ? jobs : static_cast<int>(count);
    for (int t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

/// Results in task order, regardless of the worker count.
template <typename T>
std::vector<T> parallel_map(size_t count, int jobs, const std::function<T(size_t)>& task) {
    std::vector<std::optional<T>> buf(count);
    parallel_run(count, jobs, [&](size_t k) { buf[k].emplace(task(k)); });
    std::vector<T> out;
    out.reserve(count);
    for (auto& v : buf) out.push_back(std::move(*v));
    return out;
}

/// Worker count from the RECTWALG_THREADS environment variable, else 1.
inline int default_jobs() {
    if (const char* env = std::getenv("RECTWALG_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

} // namespace rectwalg
