#include "dkp/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace dkp {

std::string_view to_string(Frame frame) {
  return frame == Frame::physical ? "physical" : "similarity";
}

double LipCurve::width() const {
  if (samples.empty()) return 0.0;
  auto [lo, hi] = std::minmax_element(samples.begin(), samples.end(),
                                      [](const Point2& p, const Point2& q) { return p.a < q.a; });
  return hi->a - lo->a;
}

double LipCurve::height() const {
  if (samples.empty()) return 0.0;
  auto [lo, hi] = std::minmax_element(samples.begin(), samples.end(),
                                      [](const Point2& p, const Point2& q) { return p.b < q.b; });
  return hi->b - lo->b;
}

double LipCurve::area() const {
  if (!closed || samples.size() < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Point2& p = samples[i];
    const Point2& q = samples[(i + 1) % samples.size()];
    s += p.a * q.b - q.a * p.b;
  }
  return 0.5 * std::abs(s);
}

namespace {

double point_segment(const Point2& p, const Point2& u, const Point2& v) {
  const double ex = v.a - u.a, ey = v.b - u.b;
  const double l2 = ex * ex + ey * ey;
  double s = l2 > 0.0 ? ((p.a - u.a) * ex + (p.b - u.b) * ey) / l2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return std::hypot(p.a - (u.a + s * ex), p.b - (u.b + s * ey));
}

double directed(const LipCurve& from, const LipCurve& to) {
  double worst = 0.0;
  const auto& q = to.samples;
  const std::size_t nseg = to.closed ? q.size() : q.size() - 1;
  for (const Point2& p : from.samples) {
    double best = std::numeric_limits<double>::infinity();
    if (q.size() == 1) best = std::hypot(p.a - q[0].a, p.b - q[0].b);
    for (std::size_t i = 0; i < nseg; ++i)
      best = std::min(best, point_segment(p, q[i], q[(i + 1) % q.size()]));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double hausdorff_distance(const LipCurve& a, const LipCurve& b) {
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  return std::max(directed(a, b), directed(b, a));
}

std::vector<ContourPolyline> zero_contours(const std::vector<double>& f,
                                           const std::vector<double>& aux, std::size_t na,
                                           std::size_t nb, double a0, double da, double b0,
                                           double db) {
  // Edge ids: horizontal edge (j, i)-(j, i+1) -> 2 * (j * na + i);
  // vertical edge (j, i)-(j+1, i) -> 2 * (j * na + i) + 1.
  auto at = [&](std::size_t j, std::size_t i) { return f[j * na + i]; };
  auto aux_at = [&](std::size_t j, std::size_t i) { return aux.empty() ? 0.0 : aux[j * na + i]; };
  auto crossing = [&](std::size_t edge) {
    const std::size_t cell = edge / 2;
    const std::size_t j = cell / na, i = cell % na;
    const std::size_t j2 = edge % 2 ? j + 1 : j;
    const std::size_t i2 = edge % 2 ? i : i + 1;
    const double v0 = at(j, i), v1 = at(j2, i2);
    const double w = v0 == v1 ? 0.5 : v0 / (v0 - v1);
    ContourVertex v;
    v.a = a0 + (static_cast<double>(i) + w * static_cast<double>(i2 - i)) * da;
    v.b = b0 + (static_cast<double>(j) + w * static_cast<double>(j2 - j)) * db;
    v.aux = aux_at(j, i) + w * (aux_at(j2, i2) - aux_at(j, i));
    return v;
  };

  std::unordered_map<std::size_t, std::vector<std::size_t>> touches;
  std::vector<std::pair<std::size_t, std::size_t>> segs;
  auto add = [&](std::size_t e0, std::size_t e1) {
    touches[e0].push_back(segs.size());
    touches[e1].push_back(segs.size());
    segs.emplace_back(e0, e1);
  };

  for (std::size_t j = 0; j + 1 < nb; ++j) {
    for (std::size_t i = 0; i + 1 < na; ++i) {
      const double v00 = at(j, i), v01 = at(j, i + 1), v10 = at(j + 1, i), v11 = at(j + 1, i + 1);
      const int code = (v00 < 0) | ((v01 < 0) << 1) | ((v11 < 0) << 2) | ((v10 < 0) << 3);
      if (code == 0 || code == 15) continue;
      const std::size_t bottom = 2 * (j * na + i);
      const std::size_t top = 2 * ((j + 1) * na + i);
      const std::size_t left = 2 * (j * na + i) + 1;
      const std::size_t right = 2 * (j * na + i + 1) + 1;
      switch (code) {
        case 1: case 14: add(left, bottom); break;
        case 2: case 13: add(bottom, right); break;
        case 3: case 12: add(left, right); break;
        case 4: case 11: add(right, top); break;
        case 6: case 9: add(bottom, top); break;
        case 7: case 8: add(left, top); break;
        case 5: case 10: {
          const bool centre_neg = (v00 + v01 + v10 + v11) < 0;
          if ((code == 5) == centre_neg) {
            add(left, top);
            add(bottom, right);
          } else {
            add(left, bottom);
            add(right, top);
          }
          break;
        }
        default: break;
      }
    }
  }

  std::vector<bool> used(segs.size(), false);
  std::vector<ContourPolyline> out;
  auto other = [&](std::size_t s, std::size_t e) { return segs[s].first == e ? segs[s].second : segs[s].first; };
  auto next_seg = [&](std::size_t e) -> std::ptrdiff_t {
    for (std::size_t s : touches[e])
      if (!used[s]) return static_cast<std::ptrdiff_t>(s);
    return -1;
  };
  // open chains first start at edges touched once
  std::vector<std::size_t> starts;
  for (auto& [e, ss] : touches)
    if (ss.size() == 1) starts.push_back(e);
  std::sort(starts.begin(), starts.end());
  auto trace = [&](std::size_t e_start, std::size_t s0) {
    ContourPolyline pl;
    std::size_t e = e_start;
    pl.vertices.push_back(crossing(e));
    std::ptrdiff_t s = static_cast<std::ptrdiff_t>(s0);
    while (s >= 0) {
      used[static_cast<std::size_t>(s)] = true;
      e = other(static_cast<std::size_t>(s), e);
      if (e == e_start) {
        pl.closed = true;
        break;
      }
      pl.vertices.push_back(crossing(e));
      s = next_seg(e);
    }
    out.push_back(std::move(pl));
  };
  for (std::size_t e : starts) {
    const std::ptrdiff_t s = next_seg(e);
    if (s >= 0) trace(e, static_cast<std::size_t>(s));
  }
  for (std::size_t s = 0; s < segs.size(); ++s)
    if (!used[s]) trace(segs[s].first, s);
  return out;
}

}  // namespace dkp
