#ifndef QSPEC_PARALLEL_HPP
#define QSPEC_PARALLEL_HPP

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qspec {

/// Global worker-thread cap. 0 means "use the runtime default".
int max_threads();

/// Set the worker-thread cap for all parallel kernels. 1 forces sequential
/// execution; 0 restores the runtime default.
void set_max_threads(int threads);

namespace detail {
int resolve_threads();
}

/// Run f(i) for i in [begin, end). Iterations must be independent; each
/// iteration writes only to its own output slots, so results are identical
/// for any thread count or schedule.
template <class F>
void parallel_for(std::int64_t begin, std::int64_t end, F&& f) {
#ifdef _OPENMP
  const int nt = detail::resolve_threads();
  if (nt != 1 && end - begin > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (std::int64_t i = begin; i < end; ++i) f(i);
    return;
  }
#endif
  for (std::int64_t i = begin; i < end; ++i) f(i);
}

} // namespace qspec

#endif
