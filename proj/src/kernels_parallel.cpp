#include "dkp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dkp::kernels::parallel {

#define DKP_PRAGMA(x) _Pragma(#x)
#define DKP_PAR_FOR DKP_PRAGMA(omp parallel for schedule(static))
#define DKP_PAR_FOR_REDUCE(op, var) DKP_PRAGMA(omp parallel for schedule(static) reduction(op : var))
#include "kernels_body.inc"
#undef DKP_PAR_FOR
#undef DKP_PAR_FOR_REDUCE

MinLoc min_loc(std::span<const double> v) {
  MinLoc best{std::numeric_limits<double>::infinity(), 0};
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(v.size());
#pragma omp parallel
  {
    MinLoc local{std::numeric_limits<double>::infinity(), 0};
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < m; ++i)
      if (v[i] < local.value) local = {v[i], static_cast<std::size_t>(i)};
#pragma omp critical(dkp_min_loc)
    {
      // ties resolve to the lowest index, matching the serial scan
      if (local.value < best.value || (local.value == best.value && local.index < best.index))
        best = local;
    }
  }
  return best;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace dkp::kernels::parallel
