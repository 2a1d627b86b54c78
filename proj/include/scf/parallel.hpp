#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace scf {

/* Computes compute(i) for i in [0, count) on up to `jobs` threads and hands
 * the results to sink in index order, as soon as each prefix is complete.
 * The first exception thrown by compute is rethrown on the calling thread
 * after the workers stop.
 */
template <class T, class Compute, class Sink>
void ordered_parallel_map(std::size_t count, unsigned jobs, Compute compute, Sink sink)
{
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::vector<std::optional<T>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::condition_variable ready;

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count || stop.load()) return;
            std::optional<T> value;
            std::exception_ptr err;
            try {
                value.emplace(compute(i));
            } catch (...) {
                err = std::current_exception();
            }
            {
                std::lock_guard lock(mu);
                if (err)
                    errors[i] = err;
                else
                    slots[i] = std::move(value);
            }
            ready.notify_all();
        }
    };

    std::vector<std::jthread> pool;
    if (jobs > 1)
        for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);

    std::exception_ptr failure;
    for (std::size_t i = 0; i < count; ++i) {
        std::optional<T> value;
        if (jobs > 1) {
            std::unique_lock lock(mu);
            ready.wait(lock, [&] { return slots[i].has_value() || errors[i]; });
            if (errors[i]) {
                failure = errors[i];
                break;
            }
            value = std::move(slots[i]);
            slots[i].reset();
        } else {
            value.emplace(compute(i));
        }
        sink(*value);
    }
    if (failure) {
        stop = true;
        pool.clear();
        std::rethrow_exception(failure);
    }
}

}  // namespace scf
