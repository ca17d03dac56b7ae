#include "zmoment/zeros.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "zmoment/error.hpp"
#include "zmoment/parallel.hpp"

namespace zmoment {
namespace {

constexpr double kChunkLength = 64.0;
constexpr double kBracketTol = 0.9e-9;
constexpr int kSubdivisionLevels = 3;
constexpr int kSubdivisionFactor = 4;

double grid_step(double t) {
  // Half the mean zero spacing pi / theta'(t), capped at 0.5.
  const double tp = riemann_siegel_theta_prime(t);
  if (tp <= 0.0) return 0.5;
  return std::min(0.5, 0.5 * std::numbers::pi / tp);
}

bool positive(double z) { return z >= 0.0; }

struct GridPoint {
  double t;
  double z;
};

int count_sign_changes(const std::vector<GridPoint>& pts) {
  int n = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (positive(pts[i - 1].z) != positive(pts[i].z)) ++n;
  return n;
}

// Cells next to a local minimum of |Z| without a sign change: where a close
// pair of zeros hides between grid points.
std::vector<bool> close_pair_cells(const std::vector<GridPoint>& pts) {
  std::vector<bool> mark(pts.size() - 1, false);
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const bool same = positive(pts[i - 1].z) == positive(pts[i].z) &&
                      positive(pts[i].z) == positive(pts[i + 1].z);
    if (same && std::abs(pts[i].z) < std::abs(pts[i - 1].z) &&
        std::abs(pts[i].z) < std::abs(pts[i + 1].z)) {
      mark[i - 1] = true;
      mark[i] = true;
    }
  }
  return mark;
}

// Brent's method; returns the best estimate and leaves the final bracket.
ZeroRecord refine(const ZetaEngine& engine, double a, double fa, double b, double fb) {
  ZeroRecord rec;
  double c = a, fc = fa, d = b - a, e = d;
  int iters = 0;
  for (;;) {
    if ((fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * kBracketTol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) break;
    if (iters > 200) {
      throw Error(ErrorCode::accuracy, "zeros", "scan_zeros",
                  "root refinement did not converge near t = " + std::to_string(b));
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc, r = fb / fc;
        p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = engine.hardy_z(b);
    ++iters;
  }
  rec.gamma = b;
  rec.bracket_lo = fb == 0.0 ? b : std::min(b, c);
  rec.bracket_hi = fb == 0.0 ? b : std::max(b, c);
  rec.refine_iters = iters;
  return rec;
}

struct ChunkResult {
  std::vector<ZeroRecord> zeros;
};

ChunkResult scan_chunk(const ZetaEngine& engine, double lo, double hi, long expected,
                       double offset) {
  std::vector<GridPoint> pts;
  pts.push_back({lo, engine.hardy_z(lo)});
  double x = lo + (offset > 0.0 ? offset : 1.0) * grid_step(lo);
  while (x < hi - 1e-9) {
    pts.push_back({x, engine.hardy_z(x)});
    x += grid_step(x);
  }
  pts.push_back({hi, engine.hardy_z(hi)});

  int found = count_sign_changes(pts);
  for (int level = 0; level < kSubdivisionLevels && found != expected; ++level) {
    auto mark = close_pair_cells(pts);
    bool any = false;
    for (bool m : mark) any = any || m;
    if (!any) mark.assign(mark.size(), true);
    std::vector<GridPoint> next;
    next.reserve(pts.size() * 2);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      next.push_back(pts[i]);
      if (!mark[i]) continue;
      const double h = (pts[i + 1].t - pts[i].t) / kSubdivisionFactor;
      for (int j = 1; j < kSubdivisionFactor; ++j) {
        const double tj = pts[i].t + j * h;
        next.push_back({tj, engine.hardy_z(tj)});
      }
    }
    next.push_back(pts.back());
    pts = std::move(next);
    found = count_sign_changes(pts);
  }

  ChunkResult out;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (positive(pts[i - 1].z) == positive(pts[i].z)) continue;
    ZeroRecord rec = refine(engine, pts[i - 1].t, pts[i - 1].z, pts[i].t, pts[i].z);
    rec.z_prime = engine.hardy(rec.gamma).z_prime;
    rec.flagged = std::abs(rec.z_prime) < 1e-12;
    out.zeros.push_back(rec);
  }
  return out;
}

}  // namespace

double count_expected(double t) {
  if (!(t >= 10.0)) {
    throw Error(ErrorCode::domain, "zeros", "count_expected", "requires t >= 10");
  }
  return riemann_siegel_theta(t) / std::numbers::pi + 1.0;
}

double s_function(const ZetaEngine& engine, double t) {
  if (!(t >= 1.0)) throw Error(ErrorCode::domain, "zeros", "s_function", "requires t >= 1");
  auto zeta_at = [&](double sigma) { return engine.zeta(Complex(sigma, t)).value; };
  // |zeta(2+it) - 1| <= zeta(2) - 1 < 1, so the principal argument is the
  // continuous one at sigma = 2.
  Complex prev = zeta_at(2.0);
  double arg = std::arg(prev);
  constexpr int kSteps = 48;
  const double step = 1.5 / kSteps;
  auto advance = [&](auto& self, double s0, double s1, Complex z0, int depth) -> Complex {
    const Complex z1 = zeta_at(s1);
    double d = std::arg(z1 / z0);
    if (std::abs(d) > std::numbers::pi / 4.0 && depth < 12) {
      const double mid = 0.5 * (s0 + s1);
      const Complex zm = self(self, s0, mid, z0, depth + 1);
      return self(self, mid, s1, zm, depth + 1);
    }
    arg += d;
    return z1;
  };
  for (int i = 0; i < kSteps; ++i) {
    const double s0 = 2.0 - i * step;
    const double s1 = (i + 1 == kSteps) ? 0.5 : 2.0 - (i + 1) * step;
    prev = advance(advance, s0, s1, prev, 0);
  }
  return arg / std::numbers::pi;
}

long count_zeros_exact(const ZetaEngine& engine, double t) {
  const double n = riemann_siegel_theta(t) / std::numbers::pi + 1.0 + s_function(engine, t);
  const double r = std::round(n);
  if (std::abs(n - r) > 0.1) {
    throw Error(ErrorCode::accuracy, "zeros", "count_zeros_exact",
                "theta/pi + 1 + S is not close to an integer at t = " + std::to_string(t) + " (" +
                    std::to_string(n) + ")");
  }
  return static_cast<long>(r);
}

ZeroSet scan_zeros(const ZetaEngine& engine, double t_max, const ScanOptions& options) {
  if (!(t_max >= 10.0 && t_max <= kMaxImaginaryPart)) {
    throw Error(ErrorCode::domain, "zeros", "scan_zeros", "t_max must lie in [10, 1e5]");
  }
  if (!(options.grid_offset >= 0.0 && options.grid_offset < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "zeros", "scan_zeros", "grid_offset must lie in [0, 1)");
  }
  constexpr double kStart = 1.0;
  std::vector<double> edges{kStart};
  while (edges.back() + kChunkLength < t_max - 1e-9) edges.push_back(edges.back() + kChunkLength);
  edges.push_back(t_max);
  const std::size_t n_chunks = edges.size() - 1;

  std::vector<long> exact(edges.size(), 0);
  parallel_for(edges.size(), options.threads,
               [&](std::size_t i) { exact[i] = count_zeros_exact(engine, edges[i]); });

  std::vector<ChunkResult> chunks(n_chunks);
  parallel_for(n_chunks, options.threads, [&](std::size_t i) {
    chunks[i] = scan_chunk(engine, edges[i], edges[i + 1], exact[i + 1] - exact[i], options.grid_offset);
  });

  ZeroSet set;
  set.t_max = t_max;
  for (auto& c : chunks)
    for (auto& z : c.zeros) {
      set.flagged += z.flagged ? 1 : 0;
      set.zeros.push_back(z);
    }
  set.count_expected = count_expected(t_max);
  set.count_reconciled = exact.back();
  set.s_of_t = static_cast<double>(set.count_reconciled) - set.count_expected;
  for (std::size_t i = 1; i < set.zeros.size(); ++i) {
    if (!(set.zeros[i].gamma > set.zeros[i - 1].gamma)) {
      throw Error(ErrorCode::internal, "zeros", "scan_zeros", "zero ordinates are not increasing");
    }
  }
  const long smooth = std::lround(set.count_expected);
  const long found = static_cast<long>(set.zeros.size());
  if (std::abs(found - smooth) > 2) {
    throw Error(ErrorCode::count_mismatch, "zeros", "scan_zeros",
                "found " + std::to_string(found) + " zeros but theta(T)/pi + 1 rounds to " +
                    std::to_string(smooth));
  }
  return set;
}

std::string zeros_to_csv(const ZeroSet& set, bool with_metadata) {
  std::string out;
  char buf[160];
  if (with_metadata) {
    std::snprintf(buf, sizeof buf, "# t_max=%.17g\n# count_expected=%.17g\n# s_of_t=%.17g\n",
                  set.t_max, set.count_expected, set.s_of_t);
    out += buf;
    out += "# count_reconciled=" + std::to_string(set.count_reconciled) + "\n";
  }
  out += with_metadata ? "gamma,z_prime,bracket_lo,bracket_hi,refine_iters\n"
                        : "gamma,z_prime,bracket_lo,bracket_hi\n";
  for (const auto& z : set.zeros) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g", z.gamma, z.z_prime, z.bracket_lo,
                  z.bracket_hi);
    out += buf;
    if (with_metadata) out += "," + std::to_string(z.refine_iters);
    out += "\n";
  }
  return out;
}

ZeroSet zeros_from_csv(std::string_view text) {
  ZeroSet set;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false, iters = false;
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::io, "zeros", "zeros_from_csv", why);
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(2, eq - 2);
      const std::string val = line.substr(eq + 1);
      if (key == "t_max") set.t_max = std::stod(val);
      else if (key == "count_expected") set.count_expected = std::stod(val);
      else if (key == "s_of_t") set.s_of_t = std::stod(val);
      else if (key == "count_reconciled") set.count_reconciled = std::stol(val);
      continue;
    }
    if (!header) {
      iters = line == "gamma,z_prime,bracket_lo,bracket_hi,refine_iters";
      if (!iters && line != "gamma,z_prime,bracket_lo,bracket_hi") {
        fail("unexpected header: " + line);
      }
      header = true;
      continue;
    }
    ZeroRecord r;
    const int fields = std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%d", &r.gamma, &r.z_prime,
                                   &r.bracket_lo, &r.bracket_hi, &r.refine_iters);
    if (fields != (iters ? 5 : 4)) {
      fail("malformed row: " + line);
    }
    r.flagged = std::abs(r.z_prime) < 1e-12;
    set.flagged += r.flagged ? 1 : 0;
    set.zeros.push_back(r);
  }
  if (!header) fail("missing header");
  return set;
}

}  // namespace zmoment
