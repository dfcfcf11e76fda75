#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace h4 {

/// Worker count used by the parallel kernels (orbit expansion, group closure,
/// branching). Defaults to 1. Results never depend on it.
unsigned worker_count();
void set_worker_count(unsigned n);

/// Calls fn(begin, end, chunk_index) over a contiguous partition of [0, n).
/// Chunk boundaries depend only on n and the worker count.
template <class Fn>
void parallel_chunks(std::size_t n, Fn&& fn) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(worker_count(), n));
    if (workers <= 1) {
        fn(std::size_t{0}, n, std::size_t{0});
        return;
    }
    const std::size_t step = (n + workers - 1) / workers;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * step;
        const std::size_t end = std::min(n, begin + step);
        if (begin >= end) break;
        threads.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
    }
    for (auto& t : threads) t.join();
}

/// out[i] = fn(i) for i in [0, n), evaluated in parallel.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
    std::vector<T> out(n);
    parallel_chunks(n, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
    });
    return out;
}

/// RAII override of the worker count.
class ScopedWorkers {
public:
    explicit ScopedWorkers(unsigned n) : saved_(worker_count()) { set_worker_count(n); }
    ~ScopedWorkers() { set_worker_count(saved_); }
    ScopedWorkers(const ScopedWorkers&) = delete;
    ScopedWorkers& operator=(const ScopedWorkers&) = delete;

private:
    unsigned saved_;
};

}  // namespace h4
