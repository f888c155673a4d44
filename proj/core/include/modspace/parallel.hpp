#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace modspace {

/// Worker cap: MODSPACE_THREADS when set (>= 1), else hardware concurrency.
int thread_budget();

/// Runs f(0..count-1) across up to thread_budget() workers. Each index writes
/// only its own slot on the caller side, so results merge deterministically.
template <class F>
void parallel_indexed(std::size_t count, F&& f) {
    const int budget = thread_budget();
    if (budget <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            f(i);
        }
    };
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(budget), count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace modspace
