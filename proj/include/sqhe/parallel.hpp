#pragma once

// Index-ordered parallel map. Results land in slot i regardless of which
// worker computed them, so output never depends on the thread count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace sqhe {

template <class F>
auto parallel_map(std::size_t count, unsigned jobs, F&& fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<std::optional<R>> slots(count);
    std::vector<std::exception_ptr> errors(count);

    auto run = [&](std::size_t i) {
        try {
            slots[i].emplace(fn(i));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };

    const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1u), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) run(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) run(i);
            });
        }
        for (auto& t : pool) t.join();
    }

    // The lowest failing index wins, whatever the schedule was.
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace sqhe
