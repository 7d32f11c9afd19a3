#include "delone/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "delone/quasi.hpp"

namespace delone {

namespace {

double frac(double x) { return x - std::floor(x); }

// u_{lo..hi} materialized as flat rows; index i holds u_{lo+i}.
struct DirectionPrefix {
  std::int64_t lo;
  int dim;
  std::vector<double> flat;

  std::span<const double> at(std::int64_t k) const {
    return {flat.data() + (k - lo) * dim, static_cast<size_t>(dim)};
  }
};

DirectionPrefix materialize(const SphericalSource& u, std::int64_t lo, std::int64_t hi) {
  DirectionPrefix p{lo, u.ambient_dim(), {}};
  p.flat.reserve(static_cast<size_t>(hi - lo + 1) * static_cast<size_t>(p.dim));
  for (std::int64_t k = lo; k <= hi; ++k) {
    const UnitVector v = u.direction(k);
    p.flat.insert(p.flat.end(), v.coords().begin(), v.coords().end());
  }
  return p;
}

std::int64_t window_width(double coef, std::int64_t k, int n) {
  return static_cast<std::int64_t>(coef * std::pow(static_cast<double>(k), 1.0 - 1.0 / n));
}

}  // namespace

bool SeparationReport::non_decaying() const {
  if (per_decade_min.empty()) return false;
  std::vector<double> mins;
  mins.reserve(per_decade_min.size());
  for (const auto& [lo, v] : per_decade_min) mins.push_back(v);
  std::vector<double> sorted = mins;
  std::sort(sorted.begin(), sorted.end());
  const size_t n = sorted.size();
  const double median = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  for (double v : mins)
    if (v < 0.5 * median) return false;
  return true;
}

SeparationReport separation_statistic(const SphericalSource& u, double kappa,
                                      std::int64_t k_min, std::int64_t k_max) {
  if (!(kappa > 0.0)) throw std::invalid_argument("separation_statistic: kappa > 0");
  if (k_min < 1 || k_max < k_min) throw std::invalid_argument("separation_statistic: bad k range");
  const int n = u.ambient_dim();
  const std::int64_t wmax = window_width(kappa, k_max, n);
  if (k_max + wmax > u.max_index())
    throw std::invalid_argument("separation_statistic: window exceeds available prefix");
  const std::int64_t lo = std::max<std::int64_t>(1, k_min - wmax);
  const DirectionPrefix pre = materialize(u, lo, k_max + wmax);

  SeparationReport rep;
  rep.kappa = kappa;
  rep.k_min = k_min;
  rep.k_max = k_max;
  rep.global_min = std::numeric_limits<double>::infinity();

  std::int64_t decade_lo = 1;
  while (decade_lo * 10 <= k_min) decade_lo *= 10;
  double decade_min = std::numeric_limits<double>::infinity();

  for (std::int64_t k = k_min; k <= k_max; ++k) {
    if (k >= decade_lo * 10) {
      rep.per_decade_min.emplace_back(decade_lo, decade_min);
      decade_min = std::numeric_limits<double>::infinity();
      while (k >= decade_lo * 10) decade_lo *= 10;
    }
    const std::int64_t w = window_width(kappa, k, n);
    const double scale = radial_scale(k, n);
    const auto uk = pre.at(k);
    for (std::int64_t m = -w; m <= w; ++m) {
      if (m == 0) continue;
      const std::int64_t l = k + m;
      if (l < lo) continue;
      const double s = scale * geodesic_distance(pre.at(l), uk);
      if (s < rep.global_min) {
        rep.global_min = s;
        rep.arg_k = k;
        rep.arg_m = m;
      }
      decade_min = std::min(decade_min, s);
    }
  }
  if (decade_min < std::numeric_limits<double>::infinity())
    rep.per_decade_min.emplace_back(decade_lo, decade_min);
  return rep;
}

double toral_separation_statistic(std::span<const double> x_flat, int dim, double kappa,
                                  std::int64_t k_min, std::int64_t k_max) {
  const int n = dim + 1;
  const std::int64_t count = static_cast<std::int64_t>(x_flat.size()) / dim;
  double best = std::numeric_limits<double>::infinity();
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    const std::int64_t w = window_width(kappa, k, n);
    if (k + w > count) throw std::invalid_argument("toral_separation_statistic: short prefix");
    const double scale = radial_scale(k, n);
    for (std::int64_t m = -w; m <= w; ++m) {
      if (m == 0) continue;
      const std::int64_t l = k + m;
      if (l < 1) continue;
      double d2 = 0.0;
      for (int j = 0; j < dim; ++j) {
        const double e = x_flat[static_cast<size_t>((l - 1) * dim + j)] -
                         x_flat[static_cast<size_t>((k - 1) * dim + j)];
        d2 += e * e;
      }
      best = std::min(best, scale * std::sqrt(d2));
    }
  }
  return best;
}

namespace {

double covering_worst_normalized(const DirectionPrefix& pre, std::int64_t k, std::int64_t w,
                                 int n_dirs, int sphere_dim, std::uint64_t seed) {
  SphereDirections gen(sphere_dim, seed);
  std::vector<double> v(static_cast<size_t>(sphere_dim) + 1);
  const double scale = radial_scale(k, sphere_dim + 1);
  double worst = 0.0;
  for (int i = 0; i < n_dirs; ++i) {
    gen.next(v);
    double dmin = std::numeric_limits<double>::infinity();
    for (std::int64_t l = k - w; l <= k + w; ++l)
      dmin = std::min(dmin, geodesic_distance(pre.at(l), v));
    worst = std::max(worst, scale * dmin);
  }
  return worst;
}

}  // namespace

CoveringReport covering_check(const SphericalSource& u, double c, double C,
                              std::span<const std::int64_t> k_samples, int n_dirs,
                              std::uint64_t seed) {
  if (!(c > 0.0) || !(C > 0.0)) throw std::invalid_argument("covering_check: c, C > 0");
  if (k_samples.empty() || n_dirs < 1) throw std::invalid_argument("covering_check: empty sampling");
  const int n = u.ambient_dim();
  CoveringReport rep;
  rep.c = c;
  rep.C = C;
  rep.k_samples.assign(k_samples.begin(), k_samples.end());
  rep.directions_per_k = n_dirs;
  rep.seed = seed;
  for (std::int64_t k : k_samples) {
    const std::int64_t w = window_width(c, k, n);
    if (k - w < 1 || k + w > u.max_index())
      throw std::invalid_argument("covering_check: window exceeds available prefix");
    const DirectionPrefix pre = materialize(u, k - w, k + w);
    const double worst = covering_worst_normalized(pre, k, w, n_dirs, n - 1, seed);
    rep.worst_defect = std::max(rep.worst_defect, std::max(0.0, worst - C));
  }
  rep.pass = rep.worst_defect == 0.0;
  return rep;
}

double covering_calibration(const SphericalSource& u, double c, std::int64_t k_cal,
                            int n_dirs, std::uint64_t seed) {
  const int n = u.ambient_dim();
  const std::int64_t w = window_width(c, k_cal, n);
  if (k_cal - w < 1 || k_cal + w > u.max_index())
    throw std::invalid_argument("covering_calibration: window exceeds available prefix");
  const DirectionPrefix pre = materialize(u, k_cal - w, k_cal + w);
  return covering_worst_normalized(pre, k_cal, w, n_dirs, n - 1, seed);
}

// ---------------------------------------------------------------------------
// fixed-radius neighbor machinery

namespace {

struct CellKey {
  std::array<std::int32_t, 4> c{};
  int dim = 0;
  bool operator==(const CellKey& o) const { return dim == o.dim && c == o.c; }
};

struct CellKeyHash {
  size_t operator()(const CellKey& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < k.dim; ++i) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.c[static_cast<size_t>(i)])) +
           0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
    }
    return static_cast<size_t>(h ^ (h >> 31));
  }
};

struct CellGrid {
  int dim;
  double cell;
  std::unordered_map<CellKey, std::vector<std::int32_t>, CellKeyHash> cells;

  CellGrid(const PointSet& pts, double cell_size) : dim(pts.dim), cell(cell_size) {
    cells.reserve(static_cast<size_t>(pts.size()));
    for (std::int64_t i = 0; i < pts.size(); ++i)
      cells[key_of(pts.point(i))].push_back(static_cast<std::int32_t>(i));
  }

  CellKey key_of(std::span<const double> p) const {
    CellKey k;
    k.dim = dim;
    for (int j = 0; j < dim; ++j)
      k.c[static_cast<size_t>(j)] =
          static_cast<std::int32_t>(std::floor(p[static_cast<size_t>(j)] / cell));
    return k;
  }
};

double sq_dist(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace

double min_pairwise_distance(const PointSet& pts) {
  const std::int64_t n = pts.size();
  if (n < 2) throw std::invalid_argument("min_pairwise_distance: at least two points required");
  const int dim = pts.dim;
  if (dim > 4) throw std::invalid_argument("min_pairwise_distance: dim <= 4 supported");

  // Upper bound from consecutive points seeds the cell size.
  double best2 = std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i + 1 < n; ++i)
    best2 = std::min(best2, sq_dist(pts.point(i), pts.point(i + 1)));
  if (best2 == 0.0) return 0.0;

  for (;;) {
    const double cell = std::sqrt(best2);
    CellGrid grid(pts, cell);
    double round_best2 = best2;
    bool rebuilt = false;

    std::array<std::int64_t, 4> off{};
    for (const auto& [key, members] : grid.cells) {
      // scan own cell and lexicographically-forward neighbors only
      std::fill(off.begin(), off.end(), -1);
      for (;;) {
        bool forward = false;
        for (int j = dim; j-- > 0;) {
          if (off[static_cast<size_t>(j)] > 0) { forward = true; break; }
          if (off[static_cast<size_t>(j)] < 0) { forward = false; break; }
        }
        CellKey nk = key;
        for (int j = 0; j < dim; ++j)
          nk.c[static_cast<size_t>(j)] += static_cast<std::int32_t>(off[static_cast<size_t>(j)]);
        const bool self = nk == key;
        if (self || forward) {
          auto it = grid.cells.find(nk);
          if (it != grid.cells.end()) {
            const auto& other = it->second;
            for (size_t a = 0; a < members.size(); ++a) {
              const auto pa = pts.point(members[a]);
              const size_t b0 = self ? a + 1 : 0;
              for (size_t b = b0; b < other.size(); ++b) {
                const double d2 = sq_dist(pa, pts.point(other[b]));
                if (d2 < round_best2) round_best2 = d2;
              }
            }
          }
        }
        int j = 0;
        while (j < dim && off[static_cast<size_t>(j)] == 1) {
          off[static_cast<size_t>(j)] = -1;
          ++j;
        }
        if (j == dim) break;
        ++off[static_cast<size_t>(j)];
      }
      if (round_best2 < 0.25 * best2) { rebuilt = true; break; }  // rebuild geometrically
    }
    best2 = round_best2;
    if (best2 == 0.0) return 0.0;
    if (!rebuilt) return std::sqrt(best2);
  }
}

double covering_radius_estimate(const PointSet& pts, double r_lo, double r_hi,
                                std::int64_t samples, std::uint64_t seed) {
  if (pts.size() < 1) throw std::invalid_argument("covering_radius_estimate: empty set");
  if (!(r_lo >= 0.0) || !(r_hi > r_lo))
    throw std::invalid_argument("covering_radius_estimate: empty annulus");
  if (samples < 1) throw std::invalid_argument("covering_radius_estimate: samples >= 1");
  const int dim = pts.dim;
  double max_norm = 0.0;
  for (std::int64_t i = 0; i < pts.size(); ++i) max_norm = std::max(max_norm, norm2(pts.point(i)));
  if (r_hi > max_norm + 1e-9)
    throw std::invalid_argument("covering_radius_estimate: annulus reaches beyond the point set");

  // Grid sized to the mean spacing keeps nearest queries local.
  const double span = 2.0 * max_norm;
  double cell = span / std::max(1.0, std::pow(static_cast<double>(pts.size()), 1.0 / dim));
  cell = std::max(cell, 1e-9);
  CellGrid grid(pts, cell);

  SphereDirections dirs(dim - 1, seed);
  KroneckerSequence radii(1, seed ^ 0x5bf03635ULL);
  std::vector<double> dir(static_cast<size_t>(dim));
  std::vector<double> x(static_cast<size_t>(dim));
  double worst = 0.0;
  for (std::int64_t s = 0; s < samples; ++s) {
    dirs.next(dir);
    double t;
    radii.next({&t, 1});
    const double r = std::pow(std::pow(r_lo, dim) + t * (std::pow(r_hi, dim) - std::pow(r_lo, dim)),
                              1.0 / dim);
    for (int j = 0; j < dim; ++j) x[static_cast<size_t>(j)] = r * dir[static_cast<size_t>(j)];

    // expanding Chebyshev shells around the sample's cell
    const CellKey ck = grid.key_of(x);
    double best2 = std::numeric_limits<double>::infinity();
    for (std::int64_t ring = 0;; ++ring) {
      if (best2 <= std::pow(static_cast<double>(ring - 1) * cell, 2) && ring > 0) break;
      bool any_cell = false;
      std::vector<std::int64_t> off(static_cast<size_t>(dim), -ring);
      for (;;) {
        std::int64_t cheb = 0;
        for (std::int64_t v : off) cheb = std::max(cheb, std::llabs(v));
        if (cheb == ring) {
          CellKey nk = ck;
          for (int j = 0; j < dim; ++j)
            nk.c[static_cast<size_t>(j)] += static_cast<std::int32_t>(off[static_cast<size_t>(j)]);
          auto it = grid.cells.find(nk);
          if (it != grid.cells.end()) {
            any_cell = true;
            for (std::int32_t idx : it->second)
              best2 = std::min(best2, sq_dist(x, pts.point(idx)));
          }
        }
        int j = 0;
        while (j < dim && off[static_cast<size_t>(j)] == ring) {
          off[static_cast<size_t>(j)] = -ring;
          ++j;
        }
        if (j == dim) break;
        ++off[static_cast<size_t>(j)];
      }
      (void)any_cell;
      if (ring > static_cast<std::int64_t>(span / cell) + 2) break;  // set exhausted
    }
    worst = std::max(worst, std::sqrt(best2));
  }
  return worst;
}

GapReport marklof_gaps(const std::function<double(std::int64_t)>& x, double h,
                       std::span<const double> R_values) {
  if (!(h > 0.0)) throw std::invalid_argument("marklof_gaps: h > 0 required");
  if (R_values.empty()) throw std::invalid_argument("marklof_gaps: no windows");
  GapReport rep;
  rep.h = h;
  rep.min_stat = std::numeric_limits<double>::infinity();
  rep.max_stat = 0.0;
  for (double R : R_values) {
    if (!(R >= 1.0)) throw std::invalid_argument("marklof_gaps: R >= 1 required");
    const std::int64_t k_lo = static_cast<std::int64_t>(std::ceil(R * R));
    const std::int64_t k_hi = static_cast<std::int64_t>(std::ceil((R + h) * (R + h))) - 1;
    std::vector<double> xs;
    xs.reserve(static_cast<size_t>(k_hi - k_lo + 1));
    for (std::int64_t k = k_lo; k <= k_hi; ++k) xs.push_back(frac(x(k)));
    std::sort(xs.begin(), xs.end());
    double g, G;
    if (xs.size() < 2) {
      g = G = 1.0;  // a single point leaves the full circle as its gap
    } else {
      g = G = xs.front() + 1.0 - xs.back();
      for (size_t i = 1; i < xs.size(); ++i) {
        const double gap = xs[i] - xs[i - 1];
        g = std::min(g, gap);
        G = std::max(G, gap);
      }
    }
    rep.R_values.push_back(R);
    rep.min_gap.push_back(g);
    rep.max_gap.push_back(G);
    rep.min_stat = std::min(rep.min_stat, R * g);
    rep.max_stat = std::max(rep.max_stat, R * G);
  }
  return rep;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fb,
               double fm, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, fm, flm, tol / 2.0, depth - 1) +
         simpson(f, m, b, fm, fb, frm, tol / 2.0, depth - 1);
}

double adaptive_integral(const std::function<double(double)>& f, double a, double b, double tol) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return simpson(f, a, b, fa, fb, fm, tol, 48);
}

}  // namespace

double cap_measure_share(int d, double rho) {
  if (d < 1) throw std::invalid_argument("cap_measure_share: d >= 1");
  if (!(rho > 0.0) || rho > M_PI)
    throw std::invalid_argument("cap_measure_share: rho in (0, pi] required");
  if (d == 1) return rho / M_PI;
  if (d == 2) return (1.0 - std::cos(rho)) / 2.0;
  auto f = [d](double t) { return std::pow(std::sin(t), d - 1); };
  const double num = adaptive_integral(f, 0.0, rho, 1e-10);
  const double den = adaptive_integral(f, 0.0, M_PI, 1e-10);
  return num / den;
}

DensityReport density_scan(const SpiralSet& spiral, std::span<const double> R_values, int caps,
                           std::uint64_t seed) {
  if (R_values.empty()) throw std::invalid_argument("density_scan: no radii");
  const int n = spiral.ambient_dim;
  const std::int64_t N = spiral.count();
  DensityReport rep;
  rep.caps = caps;
  rep.seed = seed;
  for (double R : R_values) {
    const double need = std::pow(R, n);
    if (need > static_cast<double>(N) + 0.5)
      throw std::invalid_argument("density_scan: prefix shorter than R^n");
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= N; ++k)
      if (norm2(spiral.point(k)) <= R * (1.0 + 1e-9)) ++count;
    rep.R_values.push_back(R);
    rep.counts.push_back(count);
    rep.normalized.push_back(static_cast<double>(count) / need);
  }

  if (caps > 0) {
    SphereDirections centers(n - 1, seed);
    KroneckerSequence radii(1, seed ^ 0xACC01adeULL);
    std::vector<double> w(static_cast<size_t>(n));
    for (int i = 0; i < caps; ++i) {
      centers.next(w);
      double t;
      radii.next({&t, 1});
      const double rho = M_PI * (0.02 + 0.96 * t);
      std::int64_t inside = 0;
      for (std::int64_t k = 1; k <= N; ++k) {
        const auto p = spiral.point(k);
        const double r = norm2(p);
        double cosd = 0.0;
        for (int j = 0; j < n; ++j) cosd += p[static_cast<size_t>(j)] / r * w[static_cast<size_t>(j)];
        if (std::acos(std::clamp(cosd, -1.0, 1.0)) <= rho) ++inside;
      }
      const double emp = static_cast<double>(inside) / static_cast<double>(N);
      rep.cap_discrepancy =
          std::max(rep.cap_discrepancy, std::fabs(emp - cap_measure_share(n - 1, rho)));
    }
  }
  return rep;
}

}  // namespace delone
