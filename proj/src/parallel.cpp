#include "qspec/parallel.hpp"

#include <atomic>

namespace qspec {

namespace {
std::atomic<int> g_max_threads{0};
}

int max_threads() { return g_max_threads.load(std::memory_order_relaxed); }

void set_max_threads(int threads) {
  g_max_threads.store(threads < 0 ? 0 : threads, std::memory_order_relaxed);
}

namespace detail {
int resolve_threads() {
  const int cap = max_threads();
#ifdef _OPENMP
  const int hw = omp_get_max_threads();
  if (cap == 0) return hw;
  return cap < hw ? cap : hw;
#else
  return cap == 0 ? 1 : cap;
#endif
}
} // namespace detail

} // namespace qspec
