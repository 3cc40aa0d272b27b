#pragma once

#include "dkp/curves.hpp"
#include "dkp/evolve.hpp"
#include "dkp/field.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace dkp {

/// delta = 1 - M(state)/M(initial), M the integral of the square.
double l2_deviation(const SpectralField& state, const SpectralField& initial);

struct DiagnosticsRecord {
  double t = 0.0;
  double delta = 0.0;
  double max_f = 0.0;
  double max_fx = 0.0;
  double max_fy = 0.0;
  double min_delta = 0.0;  ///< min of 1 + t F_xi (transformed runs only, else NaN)
  double tail = 0.0;       ///< largest coefficient in the outer 10% shell
};

/// Per-step scalar diagnostics.
class DiagnosticsSeries : public Observer {
 public:
  explicit DiagnosticsSeries(std::size_t stride = 1) : stride_(stride == 0 ? 1 : stride) {}

  void on_start(const StepContext& ctx) override;
  bool on_step(const StepContext& ctx) override;

  const std::vector<DiagnosticsRecord>& records() const { return records_; }
  static DiagnosticsRecord measure(const SpectralField& state, double t, double m0, bool transformed);

 private:
  std::size_t stride_;
  double m0_ = 0.0;
  std::vector<DiagnosticsRecord> records_;
};

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRecord>& records);

/// x of the steepest point of row `iy` of u, refined by a parabola through
/// |u_x| at the three nearest samples. Empty when max |u_x| is below five
/// times its median along the row. Only samples with x in [x_lo, x_hi] are
/// candidates.
std::optional<double> inflection_shock(const RealField& u, std::size_t iy,
                                       double x_lo = -std::numeric_limits<double>::infinity(),
                                       double x_hi = std::numeric_limits<double>::infinity());
/// Same for the row nearest to y.
std::optional<double> inflection_shock_at(const RealField& u, double y,
                                          double x_lo = -std::numeric_limits<double>::infinity(),
                                          double x_hi = std::numeric_limits<double>::infinity());

/// Snapshot: one text header line then nx*ny little-endian doubles.
struct SnapshotMeta {
  std::string kind = "transformed";
  std::size_t nx = 0, ny = 0;
  double half_width_x = 0.0, half_width_y = 0.0;
  double t = 0.0;
  double epsilon = 0.0, c = 0.0;
  std::string config_hash = "0";
};

void snapshot_write(const std::string& path, const SnapshotMeta& meta, const RealField& field);
/// Validates the header; `expect` (when given) must match grid, kind and hash.
RealField snapshot_read(const std::string& path, SnapshotMeta& meta,
                        const SnapshotMeta* expect = nullptr);

/// Comma-separated table with a header row.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows, const std::string& preamble = {});
/// Curve as "a,b" rows with a "# frame=... t_bar=..." first line.
void write_curve_csv(const std::string& path, const std::vector<LipCurve>& curves,
                     const std::string& a_name, const std::string& b_name);

/// FNV-1a, 64-bit, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);
std::string file_hash(const std::string& path);

}  // namespace dkp
