#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace pnlab {

/// Worker count used when the caller passes 0.
inline unsigned default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Splits [0, total) into contiguous chunks, runs `fn(begin, end)` for each
/// chunk on up to `jobs` threads and returns the results in chunk order, so
/// the merged output never depends on the worker count.
template <class Fn>
auto parallel_chunks(std::uint64_t total, unsigned jobs, Fn fn)
    -> std::vector<decltype(fn(std::uint64_t{}, std::uint64_t{}))> {
    using result_type = decltype(fn(std::uint64_t{}, std::uint64_t{}));
    if (jobs == 0) jobs = default_jobs();
    std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, std::uint64_t{jobs} * 4));
    std::vector<result_type> results(chunks);
    if (jobs == 1 || chunks == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) {
            results[c] = fn(total * c / chunks, total * (c + 1) / chunks);
        }
        return results;
    }

    std::vector<std::exception_ptr> errors(chunks);
    std::atomic_uint64_t next{0};
    {
        std::vector<std::jthread> workers;
        unsigned count = static_cast<unsigned>(std::min<std::uint64_t>(jobs, chunks));
        workers.reserve(count);
        for (unsigned t = 0; t < count; ++t) {
            workers.emplace_back([&] {
                for (std::uint64_t c = next++; c < chunks; c = next++) {
                    try {
                        results[c] = fn(total * c / chunks, total * (c + 1) / chunks);
                    } catch (...) {
                        errors[c] = std::current_exception();
                    }
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

} // namespace pnlab
