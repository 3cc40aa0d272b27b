#include "dkp/fft.hpp"

#include "dkp/errors.hpp"
#include "dkp/kernels.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace dkp {

namespace {

struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, p] : plans_) {
      fftw_destroy_plan(p.r2c);
      fftw_destroy_plan(p.c2r);
    }
  }

  const PlanPair& get(std::size_t nx, std::size_t ny) {
    std::lock_guard lock(mutex_);
    auto key = std::make_tuple(nx, ny, threads_, rigor_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    init_threads();
#ifdef DKP_FFTW_THREADS
    fftw_plan_with_nthreads(threads_);
#endif
    const unsigned flags = rigor_ == PlanRigor::measure ? FFTW_MEASURE : FFTW_ESTIMATE;
    AlignedVector<double> re(nx * ny);
    AlignedVector<cplx> co(ny * (nx / 2 + 1));
    auto* cbuf = reinterpret_cast<fftw_complex*>(co.data());
    PlanPair p;
    p.r2c = fftw_plan_dft_r2c_2d(static_cast<int>(ny), static_cast<int>(nx), re.data(), cbuf,
                                 flags);
    p.c2r = fftw_plan_dft_c2r_2d(static_cast<int>(ny), static_cast<int>(nx), cbuf, re.data(),
                                 flags);
    if (!p.r2c || !p.c2r) throw Error("FFTW planning failed");
    return plans_.emplace(key, p).first->second;
  }

  void set_threads(int n) {
    std::lock_guard lock(mutex_);
    threads_ = std::max(1, n);
  }
  void set_rigor(PlanRigor r) {
    std::lock_guard lock(mutex_);
    rigor_ = r;
  }

 private:
  void init_threads() {
#ifdef DKP_FFTW_THREADS
    if (!threads_ready_) {
      fftw_init_threads();
      threads_ready_ = true;
    }
#endif
  }

  std::mutex mutex_;
  std::map<std::tuple<std::size_t, std::size_t, int, PlanRigor>, PlanPair> plans_;
  int threads_ = kernels::parallel::max_threads();
  PlanRigor rigor_ = PlanRigor::estimate;
  bool threads_ready_ = false;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

// c2r overwrites its input, so inverse transforms work on a per-thread copy.
AlignedVector<cplx>& scratch(std::size_t n) {
  thread_local AlignedVector<cplx> buf;
  if (buf.size() < n) buf.resize(n);
  return buf;
}

}  // namespace

void set_fft_threads(int threads) { cache().set_threads(threads); }
void set_fft_rigor(PlanRigor rigor) { cache().set_rigor(rigor); }

void forward_into(const RealField& in, SpectralField& out) {
  const auto& g = *in.grid();
  if (!out.grid() || !out.grid()->same_shape(g)) out = SpectralField(in.grid());
  const auto& plan = cache().get(g.nx(), g.ny());
  fftw_execute_dft_r2c(plan.r2c, const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
  const double scale = 1.0 / static_cast<double>(g.physical_size());
  auto v = out.values();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(v.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) v[i] *= scale;
}

void inverse_into(const SpectralField& in, RealField& out) {
  const auto& g = *in.grid();
  if (!out.grid() || !out.grid()->same_shape(g)) out = RealField(in.grid());
  const auto& plan = cache().get(g.nx(), g.ny());
  auto& buf = scratch(in.size());
  std::copy(in.values().begin(), in.values().end(), buf.begin());
  fftw_execute_dft_c2r(plan.c2r, reinterpret_cast<fftw_complex*>(buf.data()), out.data());
}

SpectralField forward(const RealField& f) {
  SpectralField out(f.grid());
  forward_into(f, out);
  return out;
}

RealField inverse(const SpectralField& f) {
  RealField out(f.grid());
  inverse_into(f, out);
  return out;
}

Field2D transform(const Field2D& field, Direction direction) {
  if (direction == Direction::forward) {
    if (const auto* p = std::get_if<RealField>(&field)) return forward(*p);
    throw ContractError("forward transform requires a physical field");
  }
  if (const auto* s = std::get_if<SpectralField>(&field)) return inverse(*s);
  throw ContractError("inverse transform requires a spectral field");
}

}  // namespace dkp
