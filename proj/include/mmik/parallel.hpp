#pragma once

// Minimal fan-out helpers. Results always come back in input order so callers
// get identical output for any worker count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace mmik {

namespace detail {
inline std::atomic<int>& default_jobs_slot()
{
    static std::atomic<int> jobs{1};
    return jobs;
}
} // namespace detail

inline int default_jobs() { return detail::default_jobs_slot().load(); }
inline void set_default_jobs(int jobs) { detail::default_jobs_slot().store(std::max(1, jobs)); }

/// Calls fn(i) for i in [0, count) on up to `jobs` threads.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn, int jobs = default_jobs())
{
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(count);
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn&& fn, int jobs = default_jobs())
    -> std::vector<std::invoke_result_t<Fn&, const T&>>
{
    std::vector<std::invoke_result_t<Fn&, const T&>> out(items.size());
    parallel_for(items.size(), [&](std::size_t i) { out[i] = fn(items[i]); }, jobs);
    return out;
}

} // namespace mmik
