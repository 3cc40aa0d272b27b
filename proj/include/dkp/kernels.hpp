#pragma once

// Pointwise array kernels used on the hot path of the time stepper.
//
// Every kernel exists twice with identical signatures: `serial` is the
// plain reference loop, `parallel` is the OpenMP version used by the
// library. Elementwise kernels must agree bit for bit; reductions agree to
// roundoff (summation order differs with the thread count).

#include "dkp/field.hpp"

#include <cstddef>
#include <span>

namespace dkp::kernels {

struct MinLoc {
  double value;
  std::size_t index;
};

#define DKP_KERNEL_DECLS                                                                    \
  /* out = a * b */                                                                         \
  void multiply(std::span<cplx> out, std::span<const cplx> a, std::span<const cplx> b);     \
  /* out = e * v + q * n */                                                                 \
  void etd_stage(std::span<cplx> out, std::span<const cplx> e, std::span<const cplx> v,     \
                 std::span<const cplx> q, std::span<const cplx> n);                         \
  /* out = e * v + q * (2 nb - nv) */                                                       \
  void etd_stage_c(std::span<cplx> out, std::span<const cplx> e, std::span<const cplx> v,   \
                   std::span<const cplx> q, std::span<const cplx> nb,                       \
                   std::span<const cplx> nv);                                               \
  /* acc += s * w * n */                                                                    \
  void etd_accumulate(std::span<cplx> acc, std::span<const cplx> w, std::span<const cplx> n, \
                      double s);                                                            \
  /* out = t * (fxi * g - fy * fy) */                                                       \
  void transformed_product(std::span<double> out, std::span<const double> fxi,             \
                           std::span<const double> g, std::span<const double> fy, double t); \
  /* out[r, :] += g[r] * (1 + t * fxi[r, :]) for rows of length nx */                       \
  void add_row_term(std::span<double> out, std::span<const double> g,                      \
                    std::span<const double> fxi, double t, std::size_t nx);                 \
  /* means[r] = mean of row r */                                                            \
  void row_means(std::span<double> means, std::span<const double> in, std::size_t nx);      \
  /* out = a + b * in */                                                                    \
  void affine(std::span<double> out, std::span<const double> in, double a, double b);       \
  /* out = 0.5 * u * u */                                                                   \
  void half_square(std::span<double> out, std::span<const double> u);                      \
  /* zero every |c| < threshold; returns the number zeroed */                              \
  std::size_t krasny(std::span<cplx> c, double threshold);                                  \
  double max_abs(std::span<const double> v);                                                \
  MinLoc min_loc(std::span<const double> v);                                                \
  /* sum of w_j |c|^2 over the half layout (w = 1 on kx = 0 / Nyquist, else 2) */           \
  double half_spectrum_energy(std::span<const cplx> c, std::size_t nxh, std::size_t nx);    \
  bool all_finite(std::span<const cplx> c);                                                 \
  bool all_finite(std::span<const double> v);

namespace serial {
DKP_KERNEL_DECLS
}

namespace parallel {
DKP_KERNEL_DECLS
/// Number of threads the OpenMP runtime will use (1 without OpenMP).
int max_threads();
void set_threads(int n);
}  // namespace parallel

#undef DKP_KERNEL_DECLS

}  // namespace dkp::kernels
