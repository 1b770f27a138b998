#include "sgcs/core/parallel.hpp"

#include <atomic>

namespace sgcs {

namespace {
std::atomic<Exec> g_exec{Exec::Parallel};
}

Exec default_exec() { return g_exec.load(std::memory_order_relaxed); }

void set_default_exec(Exec e) { g_exec.store(e, std::memory_order_relaxed); }

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace detail {
bool use_parallel(Exec e, std::int64_t n) {
#ifdef _OPENMP
  // Nested parallel regions are not worth it for our loop shapes.
  return e == Exec::Parallel && n > 1 && !omp_in_parallel();
#else
  (void)e;
  (void)n;
  return false;
#endif
}
}  // namespace detail

}  // namespace sgcs
