#pragma once

// Deterministic fork/join map over an index range.  The parallel path
// uses OpenMP; the serial path is the reference implementation and is
// kept permanently for testing and benchmarking.  Both produce results
// in index order, so output is bit-identical regardless of policy.

#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace excol {

enum class ExecPolicy { serial, parallel };

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// EXCOL_THREADS=1 forces serial; any larger value (or unset) allows the
// OpenMP path with that many threads.
inline ExecPolicy default_policy() {
  if (const char* env = std::getenv("EXCOL_THREADS")) {
    if (std::string(env) == "1") return ExecPolicy::serial;
  }
  return hardware_threads() > 1 ? ExecPolicy::parallel : ExecPolicy::serial;
}

template <class R, class Fn>
std::vector<R> parallel_map(std::size_t count, Fn&& fn,
                            ExecPolicy policy = default_policy()) {
  std::vector<R> out(count);
  if (policy == ExecPolicy::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    return out;
#endif
  }
  for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
  return out;
}

}  // namespace excol
