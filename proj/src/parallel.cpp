#include "h4/parallel.hpp"

#include <atomic>

namespace h4 {

namespace {
std::atomic<unsigned> g_workers{1};
}

unsigned worker_count() { return g_workers.load(std::memory_order_relaxed); }

void set_worker_count(unsigned n) { g_workers.store(n == 0 ? 1 : n, std::memory_order_relaxed); }

}  // namespace h4
