#pragma once

#include <string_view>
#include <vector>

namespace dkp {

struct Point2 {
  double a = 0.0;  // x-like coordinate (x, xi, X1)
  double b = 0.0;  // y-like coordinate (y, Y1)
};

enum class Frame { physical, similarity };

std::string_view to_string(Frame frame);

/// Sampled boundary of the multivalued region: a closed or cusp-terminated
/// polyline in (x_bar, y_bar) or (X1, Y1).
struct LipCurve {
  Frame frame = Frame::physical;
  double t_bar = 0.0;
  bool closed = false;
  std::vector<Point2> samples;

  bool empty() const { return samples.empty(); }
  /// Extent of the samples along the first / second coordinate.
  double width() const;
  double height() const;
  /// Polygon area (shoelace); zero for open curves.
  double area() const;
};

/// Symmetric Hausdorff distance between two polylines, measured from
/// vertices to segments.
double hausdorff_distance(const LipCurve& a, const LipCurve& b);

/// Zero level set of a sampled scalar on a rectangular lattice, by marching
/// squares with linear edge interpolation. `aux` (same layout, optional) is
/// interpolated along the same edges and returned per vertex.
struct ContourVertex {
  double a, b, aux;
};
struct ContourPolyline {
  bool closed = false;
  std::vector<ContourVertex> vertices;
};
std::vector<ContourPolyline> zero_contours(const std::vector<double>& values,
                                           const std::vector<double>& aux, std::size_t na,
                                           std::size_t nb, double a0, double da, double b0,
                                           double db);

}  // namespace dkp
