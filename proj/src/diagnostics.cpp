#include "dkp/diagnostics.hpp"

#include "dkp/errors.hpp"
#include "dkp/fft.hpp"
#include "dkp/kernels.hpp"
#include "dkp/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace dkp {

double l2_deviation(const SpectralField& state, const SpectralField& initial) {
  if (!state.grid()->same_shape(*initial.grid())) throw ContractError("grid mismatch");
  const double m0 = spectral_energy(initial);
  return m0 == 0.0 ? 0.0 : 1.0 - spectral_energy(state) / m0;
}

DiagnosticsRecord DiagnosticsSeries::measure(const SpectralField& s, double t, double m0,
                                             bool transformed) {
  namespace k = kernels::parallel;
  DiagnosticsRecord r;
  r.t = t;
  r.delta = m0 == 0.0 ? 0.0 : 1.0 - spectral_energy(s) / m0;
  const RealField f = inverse(s);
  const RealField fx = physical_derivative(s, 1, 0);
  const RealField fy = physical_derivative(s, 0, 1);
  r.max_f = k::max_abs(f.values());
  r.max_fx = k::max_abs(fx.values());
  r.max_fy = k::max_abs(fy.values());
  if (transformed) {
    double m = std::numeric_limits<double>::infinity();
    for (double v : fx.values()) m = std::min(m, 1.0 + t * v);
    r.min_delta = m;
  } else {
    r.min_delta = std::numeric_limits<double>::quiet_NaN();
  }
  r.tail = spectral_tail(s);
  return r;
}

void DiagnosticsSeries::on_start(const StepContext& ctx) {
  records_.clear();
  m0_ = spectral_energy(*ctx.state);
  records_.push_back(measure(*ctx.state, ctx.t, m0_, ctx.model->kind() == ModelKind::transformed));
}

bool DiagnosticsSeries::on_step(const StepContext& ctx) {
  if (ctx.step % stride_ == 0 || ctx.step == ctx.settings->nt)
    records_.push_back(measure(*ctx.state, ctx.t, m0_, ctx.model->kind() == ModelKind::transformed));
  return true;
}

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRecord>& recs) {
  std::vector<std::vector<double>> rows;
  rows.reserve(recs.size());
  for (const auto& r : recs)
    rows.push_back({r.t, r.delta, r.max_f, r.max_fx, r.max_fy, r.min_delta, r.tail});
  write_csv(path, {"t", "delta", "max_F", "max_F_x", "max_F_y", "min_Delta", "tail"}, rows);
}

std::optional<double> inflection_shock(const RealField& u, std::size_t iy, double x_lo, double x_hi) {
  const auto& g = *u.grid();
  if (iy >= g.ny()) throw ContractError("row out of range");
  const std::size_t nx = g.nx();
  // spectral x-derivative of the row
  RealField ux = physical_derivative(forward(u), 1, 0);
  std::vector<double> a(nx);
  for (std::size_t i = 0; i < nx; ++i) a[i] = std::abs(ux(iy, i));
  std::vector<double> sorted = a;
  std::nth_element(sorted.begin(), sorted.begin() + nx / 2, sorted.end());
  const double median = sorted[nx / 2];
  std::size_t i = nx;
  for (std::size_t j = 0; j < nx; ++j)
    if (g.x(j) >= x_lo && g.x(j) <= x_hi && (i == nx || a[j] > a[i])) i = j;
  if (i == nx || !(a[i] > 5.0 * median) || a[i] == 0.0) return std::nullopt;
  const double fm = a[(i + nx - 1) % nx], f0 = a[i], fp = a[(i + 1) % nx];
  const double den = fm - 2.0 * f0 + fp;
  const double off = den != 0.0 ? 0.5 * (fm - fp) / den : 0.0;
  return g.x(i) + std::clamp(off, -0.5, 0.5) * g.dx();
}

std::optional<double> inflection_shock_at(const RealField& u, double y, double x_lo, double x_hi) {
  const auto& g = *u.grid();
  const double r = (y + g.half_width_y()) / g.dy();
  const long iy = std::lround(r);
  return inflection_shock(u, static_cast<std::size_t>(((iy % static_cast<long>(g.ny())) + g.ny()) % g.ny()), x_lo, x_hi);
}

namespace {

std::string format_meta(const SnapshotMeta& m) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "DKPSNAP v1 kind=%s nx=%zu ny=%zu hx=%.17g hy=%.17g t=%.17g epsilon=%.17g c=%.17g "
                "config_hash=%s",
                m.kind.c_str(), m.nx, m.ny, m.half_width_x, m.half_width_y, m.t, m.epsilon, m.c,
                m.config_hash.c_str());
  return buf;
}

SnapshotMeta parse_meta(const std::string& line) {
  std::istringstream in(line);
  std::string magic, version;
  in >> magic >> version;
  if (magic != "DKPSNAP" || version != "v1") throw SnapshotError("corrupt header: bad magic");
  std::map<std::string, std::string> kv;
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw SnapshotError("corrupt header: token '" + tok + "'");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  SnapshotMeta m;
  try {
    m.kind = kv.at("kind");
    m.nx = std::stoul(kv.at("nx"));
    m.ny = std::stoul(kv.at("ny"));
    m.half_width_x = std::stod(kv.at("hx"));
    m.half_width_y = std::stod(kv.at("hy"));
    m.t = std::stod(kv.at("t"));
    m.epsilon = std::stod(kv.at("epsilon"));
    m.c = std::stod(kv.at("c"));
    m.config_hash = kv.at("config_hash");
  } catch (const std::exception&) {
    throw SnapshotError("corrupt header: missing or malformed field");
  }
  return m;
}

void put_le(std::ostream& out, double v) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

double get_le(const unsigned char* b) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

}  // namespace

void snapshot_write(const std::string& path, const SnapshotMeta& meta, const RealField& f) {
  const auto& g = *f.grid();
  if (meta.nx != g.nx() || meta.ny != g.ny()) throw ContractError("snapshot meta/grid mismatch");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SnapshotError("cannot write " + path);
  out << format_meta(meta) << '\n';
  for (double v : f.values()) put_le(out, v);
  if (!out) throw SnapshotError("write failed for " + path);
}

RealField snapshot_read(const std::string& path, SnapshotMeta& meta, const SnapshotMeta* expect) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SnapshotError("cannot read " + path);
  std::string header;
  if (!std::getline(in, header)) throw SnapshotError("corrupt header: empty file");
  meta = parse_meta(header);
  if (expect) {
    if (expect->nx != meta.nx || expect->ny != meta.ny || expect->half_width_x != meta.half_width_x ||
        expect->half_width_y != meta.half_width_y)
      throw SnapshotError("grid mismatch");
    if (expect->kind != meta.kind) throw SnapshotError("model kind mismatch");
    if (expect->config_hash != meta.config_hash) throw SnapshotError("config hash mismatch");
  }
  const GridPtr g = make_grid(meta.nx, meta.ny, meta.half_width_x, meta.half_width_y);
  RealField f(g);
  std::vector<unsigned char> buf(8 * f.size());
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (static_cast<std::size_t>(in.gcount()) != buf.size())
    throw SnapshotError("corrupt payload: expected " + std::to_string(buf.size()) + " bytes, got " +
                        std::to_string(in.gcount()));
  if (in.peek() != std::char_traits<char>::eof()) throw SnapshotError("corrupt payload: trailing bytes");
  for (std::size_t i = 0; i < f.size(); ++i) f.values()[i] = get_le(&buf[8 * i]);
  return f;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows, const std::string& preamble) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  if (!preamble.empty()) out << preamble << '\n';
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  char buf[32];
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", r[i]);
      out << (i ? "," : "") << buf;
    }
    out << '\n';
  }
}

void write_curve_csv(const std::string& path, const std::vector<LipCurve>& curves,
                     const std::string& a_name, const std::string& b_name) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  char buf[96];
  const Frame frame = curves.empty() ? Frame::physical : curves.front().frame;
  const double tb = curves.empty() ? 0.0 : curves.front().t_bar;
  std::snprintf(buf, sizeof buf, "# frame=%s t_bar=%.17g", std::string(to_string(frame)).c_str(), tb);
  out << buf << '\n' << "curve," << a_name << ',' << b_name << '\n';
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const auto& c = curves[k];
    for (const Point2& p : c.samples) {
      std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g", k, p.a, p.b);
      out << buf << '\n';
    }
    if (c.closed && !c.samples.empty()) {
      std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g", k, c.samples.front().a, c.samples.front().b);
      out << buf << '\n';
    }
  }
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return fnv1a_hex(ss.str());
}

}  // namespace dkp
