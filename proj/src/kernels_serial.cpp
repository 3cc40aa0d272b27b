#include "dkp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dkp::kernels::serial {

#define DKP_PAR_FOR
#define DKP_PAR_FOR_REDUCE(op, var)
#include "kernels_body.inc"
#undef DKP_PAR_FOR
#undef DKP_PAR_FOR_REDUCE

MinLoc min_loc(std::span<const double> v) {
  MinLoc best{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < best.value) best = {v[i], i};
  return best;
}

}  // namespace dkp::kernels::serial
