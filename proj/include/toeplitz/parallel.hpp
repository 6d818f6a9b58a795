#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace toeplitz {

inline unsigned default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1u : n;
}

// Static contiguous partition of [0, n) into at most `jobs` chunks.
// fn(begin, end, chunk_index). Chunk boundaries depend only on (n, jobs),
// and callers merge results in chunk order, so output never depends on
// scheduling. The first exception by chunk index is rethrown.
template <class Fn>
void parallel_chunks(std::size_t n, unsigned jobs, Fn&& fn) {
    if (n == 0) return;
    std::size_t parts = std::max<std::size_t>(1, std::min<std::size_t>(jobs ? jobs : 1, n));
    if (parts == 1) {
        fn(std::size_t{0}, n, std::size_t{0});
        return;
    }
    std::vector<std::exception_ptr> errs(parts);
    std::vector<std::thread> threads;
    threads.reserve(parts);
    for (std::size_t p = 0; p < parts; ++p) {
        std::size_t b = n * p / parts, e = n * (p + 1) / parts;
        threads.emplace_back([&, b, e, p] {
            try {
                fn(b, e, p);
            } catch (...) {
                errs[p] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

// Per-index variant; results[i] = fn(i).
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, Fn&& fn) {
    std::vector<T> out(n);
    parallel_chunks(n, jobs, [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t i = b; i < e; ++i) out[i] = fn(i);
    });
    return out;
}

} // namespace toeplitz
