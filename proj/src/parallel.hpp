#pragma once

// Minimal fork-join helper. Internal.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace bellpoly::detail {

// BELLPOLY_THREADS when it parses as a positive integer, otherwise the
// hardware concurrency (at least 1).
inline std::size_t worker_count() {
    if (const char* env = std::getenv("BELLPOLY_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(std::min(v, 256L));
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Calls fn(worker, chunk) for every chunk in [0, chunks) using up to
// `workers` threads; worker ids are in [0, workers). The first exception
// thrown by any call is rethrown after all threads finish.
template <typename Fn>
void parallel_chunks(std::size_t chunks, std::size_t workers, Fn&& fn) {
    workers = std::max<std::size_t>(1, std::min(workers, chunks));
    if (workers == 1) {
        for (std::size_t c = 0; c < chunks; ++c) fn(std::size_t{0}, c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](std::size_t worker) {
        try {
            for (std::size_t c = next++; c < chunks; c = next++) fn(worker, c);
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = chunks;
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(work, w);
    work(0);
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace bellpoly::detail
