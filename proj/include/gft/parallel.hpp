#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace gft {

namespace detail {
inline std::atomic<unsigned> thread_override{0};
// Set on pool workers; nested parallel_for calls then run inline.
inline thread_local bool in_worker = false;
}

/// Worker cap. An explicit set_max_threads wins, then the GFT_THREADS
/// environment variable; 0 in either place means hardware concurrency.
inline unsigned max_threads()
{
    unsigned n = detail::thread_override.load(std::memory_order_relaxed);
    if (n == 0) {
        if (const char* env = std::getenv("GFT_THREADS")) {
            try {
                n = static_cast<unsigned>(std::stoul(env));
            } catch (const std::exception&) {
                n = 0;
            }
        }
    }
    if (n == 0)
        n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

inline void set_max_threads(unsigned n) { detail::thread_override.store(n, std::memory_order_relaxed); }

// Runs body(i) for i in [0, count). Indices are split into contiguous
// chunks, one per worker. body must only write state owned by index i, so
// the combined result does not depend on scheduling. If several indices
// throw, the exception from the lowest index is rethrown, matching what a
// sequential loop would report.
template <class Body>
void parallel_for(std::size_t count, Body&& body, std::size_t min_chunk = 1)
{
    if (count == 0)
        return;
    const std::size_t by_size = (count + min_chunk - 1) / std::max<std::size_t>(min_chunk, 1);
    const std::size_t workers = std::min<std::size_t>(max_threads(), by_size);
    if (workers <= 1 || detail::in_worker) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = count * w / workers;
            const std::size_t end = count * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] {
                detail::in_worker = true;
                try {
                    for (std::size_t i = begin; i < end; ++i)
                        body(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace gft
