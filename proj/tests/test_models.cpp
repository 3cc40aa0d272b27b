#include "dkp/errors.hpp"
#include "dkp/fft.hpp"
#include "dkp/models.hpp"
#include "dkp/spectral.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <numbers>

using namespace dkp;
using std::numbers::pi;

namespace {

cplx multiplier_at(const DiagonalOperator& op, std::size_t iy, std::size_t jx) {
  return op.multipliers[iy * op.grid->nxh() + jx];
}

double inner(const SpectralField& a, const SpectralField& b) {
  const auto& g = *a.grid();
  double s = 0.0;
  for (std::size_t iy = 0; iy < g.ny(); ++iy)
    for (std::size_t j = 0; j < g.nxh(); ++j) {
      const double w = (j == 0 || j == g.nxh() - 1) ? 1.0 : 2.0;
      s += w * (std::conj(a(iy, j)) * b(iy, j)).real();
    }
  return s * g.area();
}

}  // namespace

TEST_CASE("linear operator entries") {
  auto g = make_grid(16, 16, pi, pi);
  const auto tr = linear_operator(ModelKind::transformed, g, 0.0, 0.0);
  CHECK(multiplier_at(tr, 0, 1) == cplx{});
  CHECK(std::abs(multiplier_at(tr, 1, 1) - cplx(0.0, 1.0)) < 1e-15);
  CHECK(multiplier_at(tr, 1, 0) == cplx{});

  const auto d0 = linear_operator(ModelKind::dissipative, g, 0.01, 0.0);
  CHECK(std::abs(multiplier_at(d0, 1, 1) - cplx(-0.01, 1.0)) < 1e-15);
  const auto d1 = linear_operator(ModelKind::dissipative, g, 0.01, 1.0);
  CHECK(std::abs(multiplier_at(d1, 1, 2) - cplx(-0.05, 0.5)) < 1e-15);
  for (const cplx& m : d1.multipliers) CHECK(m.real() <= 0.0);
}

TEST_CASE("model binding invariants") {
  auto g = make_grid(8, 8, 1.0, 1.0);
  CHECK_THROWS_AS(ModelBinding(ModelKind::transformed, g, 0.1), ContractError);
  CHECK_THROWS_AS(ModelBinding(ModelKind::dissipative, g, 0.1, -1.0), ContractError);
  CHECK(parse_model_kind(to_string(ModelKind::dissipative)) == ModelKind::dissipative);
  for (ProfileId id : {ProfileId::sym_sech, ProfileId::asym_gauss_radial, ProfileId::asym_gauss_skew})
    CHECK(parse_profile_id(to_string(id)) == id);
  CHECK_THROWS(parse_profile_id("gauss"));
}

TEST_CASE("transformed nonlinearity: trivial cases") {
  auto g = make_grid(32, 32, pi, pi);
  const SpectralField f = forward(test::random_smooth(g, 2, 4));
  CHECK(test::max_abs(inverse(nonlinear_transformed(f, 0.0))) == 0.0);
  const SpectralField fy = forward(test::sample(g, [](double x, double) { return std::sin(x) + 0.3 * std::cos(2 * x); }));
  CHECK(test::max_abs(inverse(nonlinear_transformed(fy, 0.8))) < 1e-14);
}

TEST_CASE("transformed nonlinearity against a symbolic expansion") {
  auto g = make_grid(16, 16, pi, pi);
  const double t = 1.0;
  const SpectralField f = forward(test::sample(g, [](double x, double y) { return std::sin(x) * std::cos(y); }));
  // F_xi = cos x cos y, d_xi^{-1} F_yy = cos x cos y, F_y = -sin x sin y
  auto plain = [t](double x, double y) {
    const double fx = std::cos(x) * std::cos(y), g0 = std::cos(x) * std::cos(y), fy = -std::sin(x) * std::sin(y);
    return t * (fx * g0 - fy * fy);
  };
  CHECK(test::max_diff(inverse(nonlinear_transformed(f, t, false)), test::sample(g, plain)) < 1e-13);

  // row mean of the plain term is (t/2) cos 2y; it is removed through g(y) (1 + t F_xi)
  auto projected = [&](double x, double y) {
    const double gy = -0.5 * t * std::cos(2.0 * y);
    return plain(x, y) + gy * (1.0 + t * std::cos(x) * std::cos(y));
  };
  const RealField n = inverse(nonlinear_transformed(f, t, true));
  CHECK(test::max_diff(n, test::sample(g, projected)) < 1e-13);
  for (std::size_t iy = 0; iy < g->ny(); ++iy) {
    double m = 0.0;
    for (std::size_t ix = 0; ix < g->nx(); ++ix) m += n(iy, ix);
    CHECK(std::abs(m) < 1e-13);
  }
}

TEST_CASE("dissipative nonlinearity") {
  auto g = make_grid(32, 16, pi, pi);
  CHECK(test::max_abs(inverse(nonlinear_dissipative(forward(RealField(g, 1.7))))) < 1e-15);
  const RealField n = inverse(nonlinear_dissipative(forward(test::sample(g, [](double x, double) { return std::sin(x); }))));
  CHECK(test::max_diff(n, test::sample(g, [](double x, double) { return -std::sin(x) * std::cos(x); })) < 1e-14);
}

TEST_CASE("dissipative nonlinearity against fourth-order finite differences") {
  auto g = make_grid(512, 8, pi, pi);
  const RealField u = test::random_smooth(g, 17, 2);
  const RealField n = inverse(nonlinear_dissipative(forward(u)));
  const double h = g->dx();
  const std::size_t nx = g->nx();
  double err = 0.0;
  for (std::size_t iy = 0; iy < g->ny(); ++iy)
    for (std::size_t ix = 0; ix < nx; ++ix) {
      auto at = [&](long k) { return u(iy, static_cast<std::size_t>((static_cast<long>(ix) + k + static_cast<long>(nx)) % static_cast<long>(nx))); };
      const double ux = (-at(2) + 8 * at(1) - 8 * at(-1) + at(-2)) / (12 * h);
      err = std::max(err, std::abs(n(iy, ix) + u(iy, ix) * ux));
    }
  CHECK(err < 1e-6);
}

TEST_CASE("energy balance of the semidiscrete right-hand sides") {
  auto g = make_grid(64, 64, pi, pi);
  const SpectralField u = forward(test::random_smooth(g, 23, 5));
  ModelBinding inviscid(ModelKind::dissipative, g, 0.0, 0.0);
  const double m = inner(u, u);
  CHECK(std::abs(inner(u, inviscid.rhs(u, 0.0))) < 1e-12 * m);
  ModelBinding viscous(ModelKind::dissipative, g, 0.01, 1.0);
  CHECK(inner(u, viscous.rhs(u, 0.0)) < 0.0);
}

TEST_CASE("initial profiles") {
  auto g = make_grid(512, 512, 5 * pi, 5 * pi);
  const InitialProfile sech{ProfileId::sym_sech};
  CHECK(sech(0.0, 0.0) == 0.0);
  CHECK(sech(0.0, 0.7) == 0.0);

  const double h = 1e-5;
  std::function<double(double, double)> env[3] = {
      [](double x, double y) { return -6.0 / std::pow(std::cosh(std::hypot(x, y)), 2); },
      [](double x, double y) { return 6.0 * (x + 1) * (y - 1) * std::exp(-x * x - y * y); },
      [](double x, double y) { return 6.0 * std::exp(-x * x - 5 * y * y - 3 * x * y); }};
  const ProfileId ids[3] = {ProfileId::sym_sech, ProfileId::asym_gauss_radial, ProfileId::asym_gauss_skew};
  for (int k = 0; k < 3; ++k) {
    const InitialProfile p{ids[k]};
    for (auto [x, y] : {std::pair{0.3, -0.2}, std::pair{-1.1, 0.9}, std::pair{0.05, 1.7}}) {
      const double fd = (env[k](x + h, y) - env[k](x - h, y)) / (2 * h);
      CHECK(p(x, y) == doctest::Approx(fd).epsilon(1e-7));
    }
    CHECK(boundary_ratio(p, g) < 1e-12);
    const RealField f = initial_profile(p, g);
    double peak = 0.0;
    for (double v : f.values()) peak = std::max(peak, std::abs(v));
    for (std::size_t iy = 0; iy < g->ny(); ++iy) {
      double m = 0.0;
      for (std::size_t ix = 0; ix < g->nx(); ++ix) m += f(iy, ix);
      CHECK(std::abs(m / static_cast<double>(g->nx())) <= 1e-13 * peak);
    }
  }
}

TEST_CASE("skew profile peak against dense sampling of the envelope derivative") {
  auto g = make_grid(256, 256, 5 * pi, 5 * pi);
  const RealField f = initial_profile({ProfileId::asym_gauss_skew}, g);
  double gmax = -1e300;
  for (double v : f.values()) gmax = std::max(gmax, v);
  auto env = [](double x, double y) { return 6.0 * std::exp(-x * x - 5 * y * y - 3 * x * y); };
  double dense = -1e300, xm = 0, ym = 0;
  const double h = 1e-6;
  for (double x = -3; x <= 3; x += 2e-3)
    for (double y = -2; y <= 2; y += 2e-3) {
      const double v = (env(x + h, y) - env(x - h, y)) / (2 * h);
      if (v > dense) dense = v, xm = x, ym = y;
    }
  const InitialProfile p{ProfileId::asym_gauss_skew};
  CHECK(p(xm, ym) == doctest::Approx(dense).epsilon(1e-6));
  CHECK(gmax <= dense * (1 + 1e-9));
  CHECK(gmax >= 0.9 * dense);
}
