#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crux {

// Execution policy for the enumeration kernels. Serial is the reference
// implementation; Parallel uses OpenMP with reductions arranged so the result
// (including any reported witness) is identical to the serial one. Auto picks
// Parallel when OpenMP is available and the input is large enough to matter.
enum class ExecMode { Serial, Parallel, Auto };

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline bool use_parallel(ExecMode mode, long long work_estimate) {
#ifdef _OPENMP
  if (mode == ExecMode::Serial) return false;
  if (mode == ExecMode::Parallel) return true;
  return work_estimate >= (1 << 14) && hardware_threads() > 1;
#else
  (void)mode;
  (void)work_estimate;
  return false;
#endif
}

}  // namespace crux
