#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sgcs {

enum class Exec { Serial, Parallel };

/// Process-wide default execution policy for the trial/replication loops.
/// The serial path is the reference implementation; tests pin it explicitly
/// and assert bit-identical results against the parallel path.
Exec default_exec();
void set_default_exec(Exec e);

int hardware_threads();

namespace detail {
bool use_parallel(Exec e, std::int64_t n);
}

/// Index-parallel loop. Each body(i) must be independent of the others and
/// write only to its own slot of any shared output, so results do not depend
/// on the execution policy or thread count.
template <typename F>
void parallel_for(std::int64_t n, F&& body, Exec exec) {
#ifdef _OPENMP
  if (detail::use_parallel(exec, n)) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#else
  (void)exec;
#endif
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

template <typename F>
void parallel_for(std::int64_t n, F&& body) {
  parallel_for(n, body, default_exec());
}

}  // namespace sgcs
