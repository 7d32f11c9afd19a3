#include "delone/dioph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace delone {

namespace {

double frac(double x) { return x - std::floor(x); }

double eval_poly(std::span<const long long> c, double x) {
  double v = 0.0;
  for (size_t i = c.size(); i-- > 0;) v = v * x + static_cast<double>(c[i]);
  return v;
}

double eval_poly_deriv(std::span<const long long> c, double x) {
  double v = 0.0;
  for (size_t i = c.size(); i-- > 1;) v = v * x + static_cast<double>(i) * static_cast<double>(c[i]);
  return v;
}

// Unique root of the monic polynomial in the bracket [lo, hi], bisection
// followed by Newton polish.
double poly_root(std::span<const long long> c, double lo, double hi) {
  double flo = eval_poly(c, lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = eval_poly(c, mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double r = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    const double f = eval_poly(c, r);
    const double df = eval_poly_deriv(c, r);
    if (df == 0.0) break;
    r -= f / df;
  }
  return r;
}

long long validation_b_max(int d, std::uint64_t budget) {
  long long b = 1;
  while (b < 50) {
    const long double count = std::pow(2.0L * (b + 1) + 1.0L, d);
    if (count > static_cast<long double>(budget)) break;
    ++b;
  }
  return b;
}

}  // namespace

double dist_to_nearest_int(double x) { return std::fabs(x - std::nearbyint(x)); }

BadVector make_bad_vector(int d) {
  if (d < 1 || d > 8)
    throw std::invalid_argument("make_bad_vector: supported dimensions are 1..8");
  BadVector out;
  out.dim = d;
  if (d == 1) {
    out.min_poly = {-1, -1, 1};  // x^2 - x - 1
    out.theta = (1.0 + std::sqrt(5.0)) / 2.0;
    out.label = "golden";
  } else if (d == 2) {
    out.min_poly = {-1, -2, 1, 1};  // x^3 + x^2 - 2x - 1
    out.theta = 2.0 * std::cos(2.0 * M_PI / 7.0);
    out.label = "cos2pi7";
  } else {
    out.min_poly.assign(static_cast<size_t>(d) + 2, 0);  // x^{d+1} - x - 1
    out.min_poly[0] = -1;
    out.min_poly[1] = -1;
    out.min_poly[static_cast<size_t>(d) + 1] = 1;
    out.theta = poly_root(out.min_poly, 1.0, 2.0);
    out.label = "trinomial-root-d" + std::to_string(d);
  }
  if (std::fabs(eval_poly(out.min_poly, out.theta)) > 1e-12)
    throw std::runtime_error("make_bad_vector: minimal polynomial residual too large");
  out.alpha.resize(d);
  double p = 1.0;
  for (int j = 0; j < d; ++j) {
    p *= out.theta;
    out.alpha[j] = p;
  }
  const long long b = validation_b_max(d, 4'000'000);
  if (!(transference_statistic(out, b) > 0.0))
    throw std::runtime_error("make_bad_vector: transference statistic not positive");
  return out;
}

double badness_statistic(const BadVector& alpha, long long q_max) {
  if (q_max < 1) throw std::invalid_argument("badness_statistic: q_max >= 1");
  const double inv_d = 1.0 / alpha.dim;
  double best = std::numeric_limits<double>::infinity();
  for (long long q = 1; q <= q_max; ++q) {
    double err = 0.0;
    for (double a : alpha.alpha) err = std::max(err, dist_to_nearest_int(q * a));
    best = std::min(best, std::pow(static_cast<double>(q), inv_d) * err);
  }
  return best;
}

double transference_statistic(const BadVector& alpha, long long b_max, std::uint64_t budget) {
  if (b_max < 1) throw std::invalid_argument("transference_statistic: b_max >= 1");
  const int d = alpha.dim;
  const long double count = std::pow(2.0L * b_max + 1.0L, d) - 1.0L;
  if (count > static_cast<long double>(budget))
    throw std::invalid_argument("transference_statistic: enumeration exceeds budget");
  std::vector<long long> b(static_cast<size_t>(d), -b_max);
  double best = std::numeric_limits<double>::infinity();
  for (;;) {
    bool zero = true;
    for (long long v : b)
      if (v != 0) { zero = false; break; }
    if (!zero) {
      double s = 0.0;
      long long ninf = 0;
      for (int j = 0; j < d; ++j) {
        s += static_cast<double>(b[static_cast<size_t>(j)]) * alpha.alpha[static_cast<size_t>(j)];
        ninf = std::max(ninf, std::llabs(b[static_cast<size_t>(j)]));
      }
      const double v = dist_to_nearest_int(s) * std::pow(static_cast<double>(ninf), d);
      best = std::min(best, v);
    }
    int i = 0;
    while (i < d && b[static_cast<size_t>(i)] == b_max) {
      b[static_cast<size_t>(i)] = -b_max;
      ++i;
    }
    if (i == d) break;
    ++b[static_cast<size_t>(i)];
  }
  return best;
}

std::vector<BestApproximant> best_approximants(const BadVector& alpha, long long q_max) {
  if (q_max < 1) throw std::invalid_argument("best_approximants: q_max >= 1");
  std::vector<BestApproximant> out;
  double best = std::numeric_limits<double>::infinity();
  for (long long q = 1; q <= q_max; ++q) {
    BestApproximant cand;
    cand.q = q;
    cand.p.resize(static_cast<size_t>(alpha.dim));
    double err = 0.0;
    for (int j = 0; j < alpha.dim; ++j) {
      const double v = q * alpha.alpha[static_cast<size_t>(j)];
      const double pj = std::nearbyint(v);
      cand.p[static_cast<size_t>(j)] = static_cast<long long>(pj);
      err = std::max(err, std::fabs(v - pj));
    }
    cand.err = err;
    if (err < best) {
      best = err;
      out.push_back(std::move(cand));
    }
  }
  return out;
}

namespace {

// Exact d=1 dispersion: half the largest circular gap.
TorusDispersion dispersion_1d(std::span<const double> pts) {
  std::vector<double> xs(pts.begin(), pts.end());
  for (double& x : xs) x = frac(x);
  std::sort(xs.begin(), xs.end());
  double gap = xs.front() + 1.0 - xs.back();
  for (size_t i = 1; i < xs.size(); ++i) gap = std::max(gap, xs[i] - xs[i - 1]);
  return TorusDispersion{gap / 2.0, 0.0, true};
}

struct ToralBuckets {
  int dim;
  int per_axis;
  std::vector<std::vector<double>> cells;  // flattened bucket -> packed coords

  ToralBuckets(std::span<const double> pts, int dim_, int per_axis_)
      : dim(dim_), per_axis(per_axis_) {
    size_t total = 1;
    for (int i = 0; i < dim; ++i) total *= static_cast<size_t>(per_axis);
    cells.resize(total);
    const size_t n = pts.size() / static_cast<size_t>(dim);
    for (size_t i = 0; i < n; ++i) {
      size_t key = 0;
      for (int j = 0; j < dim; ++j) {
        const double c = frac(pts[i * dim + static_cast<size_t>(j)]);
        int b = static_cast<int>(c * per_axis);
        b = std::min(b, per_axis - 1);
        key = key * static_cast<size_t>(per_axis) + static_cast<size_t>(b);
      }
      for (int j = 0; j < dim; ++j)
        cells[key].push_back(frac(pts[i * dim + static_cast<size_t>(j)]));
    }
  }

  // Exact toral sup-distance from g to the nearest stored point, found by
  // expanding Chebyshev rings of buckets.
  double nearest_sup(std::span<const double> g) const {
    std::vector<int> gb(static_cast<size_t>(dim));
    for (int j = 0; j < dim; ++j)
      gb[static_cast<size_t>(j)] =
          std::min(static_cast<int>(g[static_cast<size_t>(j)] * per_axis), per_axis - 1);
    double best = 0.5;
    const int rmax = per_axis / 2 + 1;
    std::vector<int> off(static_cast<size_t>(dim));
    for (int r = 0; r <= rmax; ++r) {
      if (best <= static_cast<double>(r - 1) / per_axis) break;
      // iterate cells with Chebyshev bucket distance exactly r
      std::fill(off.begin(), off.end(), -r);
      for (;;) {
        int cheb = 0;
        for (int v : off) cheb = std::max(cheb, std::abs(v));
        if (cheb == r) {
          size_t key = 0;
          for (int j = 0; j < dim; ++j) {
            int b = (gb[static_cast<size_t>(j)] + off[static_cast<size_t>(j)]) % per_axis;
            if (b < 0) b += per_axis;
            key = key * static_cast<size_t>(per_axis) + static_cast<size_t>(b);
          }
          const auto& cell = cells[key];
          const size_t m = cell.size() / static_cast<size_t>(dim);
          for (size_t i = 0; i < m; ++i) {
            double dsup = 0.0;
            for (int j = 0; j < dim; ++j) {
              double e = std::fabs(cell[i * static_cast<size_t>(dim) + static_cast<size_t>(j)] -
                                   g[static_cast<size_t>(j)]);
              e = std::min(e, 1.0 - e);
              dsup = std::max(dsup, e);
            }
            best = std::min(best, dsup);
          }
        }
        int i = 0;
        while (i < dim && off[static_cast<size_t>(i)] == r) {
          off[static_cast<size_t>(i)] = -r;
          ++i;
        }
        if (i == dim) break;
        ++off[static_cast<size_t>(i)];
      }
    }
    return best;
  }
};

}  // namespace

TorusDispersion torus_dispersion(std::span<const double> pts_flat, int dim, int grid_per_axis) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("torus_dispersion: dim must be 1..3");
  if (pts_flat.empty() || pts_flat.size() % static_cast<size_t>(dim) != 0)
    throw std::invalid_argument("torus_dispersion: empty or malformed point list");
  if (dim == 1) return dispersion_1d(pts_flat);

  const size_t n = pts_flat.size() / static_cast<size_t>(dim);
  const int buckets = std::clamp(static_cast<int>(std::sqrt(static_cast<double>(n))), 4, 64);
  ToralBuckets index(pts_flat, dim, buckets);

  double worst = 0.0;
  std::vector<double> g(static_cast<size_t>(dim), 0.0);
  std::vector<int> idx(static_cast<size_t>(dim), 0);
  for (;;) {
    for (int j = 0; j < dim; ++j)
      g[static_cast<size_t>(j)] = static_cast<double>(idx[static_cast<size_t>(j)]) / grid_per_axis;
    worst = std::max(worst, index.nearest_sup(g));
    int i = 0;
    while (i < dim && idx[static_cast<size_t>(i)] == grid_per_axis - 1) {
      idx[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == dim) break;
    ++idx[static_cast<size_t>(i)];
  }
  return TorusDispersion{worst, 1.0 / grid_per_axis, false};
}

namespace {

std::vector<double> multiples_mod1(const BadVector& alpha, long long m, ParityFilter parity) {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(m) * static_cast<size_t>(alpha.dim));
  for (long long q = 1; q <= m; ++q) {
    if (parity == ParityFilter::even && (q % 2) != 0) continue;
    if (parity == ParityFilter::odd && (q % 2) == 0) continue;
    for (double a : alpha.alpha) out.push_back(frac(q * a));
  }
  return out;
}

}  // namespace

DensityCertificate epsilon_dense_bound(const BadVector& alpha, double epsilon,
                                       ParityFilter parity, long long cap, int grid_per_axis) {
  if (!(epsilon > 0.0) || !(epsilon < 0.5))
    throw std::invalid_argument("epsilon_dense_bound: epsilon in (0, 1/2) required");
  auto dispersion_at = [&](long long m) -> TorusDispersion {
    const auto pts = multiples_mod1(alpha, m, parity);
    if (pts.empty()) return TorusDispersion{1.0, 0.0, true};
    return torus_dispersion(pts, alpha.dim, grid_per_axis);
  };
  long long hi = 1;
  TorusDispersion dhi = dispersion_at(hi);
  while (dhi.value > epsilon) {
    hi *= 2;
    if (hi > cap)
      throw std::runtime_error("epsilon_dense_bound: prefix cap exceeded (epsilon too small for budget)");
    dhi = dispersion_at(hi);
  }
  long long lo = std::max<long long>(1, hi / 2);
  while (lo < hi) {
    const long long mid = lo + (hi - lo) / 2;
    if (dispersion_at(mid).value <= epsilon)
      hi = mid;
    else
      lo = mid + 1;
  }
  const TorusDispersion fin = dispersion_at(hi);
  DensityCertificate cert;
  cert.epsilon = epsilon;
  cert.m = hi;
  cert.achieved_dispersion = fin.value;
  cert.grid_step = fin.grid_step;
  cert.empirical_k = static_cast<double>(hi) * std::pow(epsilon, alpha.dim);
  return cert;
}

namespace {

// Row-style integer Hermite normal form for small d; rows generate the
// lattice q*L = {q_nu * x : x in L_nu}.
std::vector<std::vector<long long>> hermite_rows(std::vector<std::vector<long long>> rows, int d) {
  int row = 0;
  for (int col = 0; col < d && row < static_cast<int>(rows.size()); ++col) {
    for (;;) {
      int piv = -1;
      long long best = 0;
      for (int r = row; r < static_cast<int>(rows.size()); ++r) {
        const long long v = std::llabs(rows[static_cast<size_t>(r)][static_cast<size_t>(col)]);
        if (v != 0 && (piv < 0 || v < best)) {
          piv = r;
          best = v;
        }
      }
      if (piv < 0) break;
      std::swap(rows[static_cast<size_t>(row)], rows[static_cast<size_t>(piv)]);
      bool reduced = true;
      for (int r = row + 1; r < static_cast<int>(rows.size()); ++r) {
        const long long a = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
        const long long b = rows[static_cast<size_t>(row)][static_cast<size_t>(col)];
        if (a != 0) {
          const long long f = a / b;
          for (int c = 0; c < d; ++c)
            rows[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                f * rows[static_cast<size_t>(row)][static_cast<size_t>(c)];
          if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) reduced = false;
        }
      }
      if (reduced) break;
    }
    if (rows[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
      if (rows[static_cast<size_t>(row)][static_cast<size_t>(col)] < 0)
        for (int c = 0; c < d; ++c) rows[static_cast<size_t>(row)][static_cast<size_t>(c)] *= -1;
      for (int r = 0; r < row; ++r) {
        const long long f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                            rows[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (int c = 0; c < d; ++c)
          rows[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
              f * rows[static_cast<size_t>(row)][static_cast<size_t>(c)];
      }
      ++row;
    }
  }
  rows.resize(static_cast<size_t>(d));
  return rows;
}

BestApproximant nth_best_approximant(const BadVector& alpha, int nu_index) {
  if (nu_index < 1) throw std::invalid_argument("nu_index >= 1 required");
  long long q_max = 64;
  for (;;) {
    const auto list = best_approximants(alpha, q_max);
    if (static_cast<int>(list.size()) >= nu_index)
      return list[static_cast<size_t>(nu_index) - 1];
    if (q_max > 2'000'000)
      throw std::runtime_error("approximant_lattice: nu_index beyond search budget");
    q_max *= 4;
  }
}

}  // namespace

ApproximantLattice approximant_lattice(const BadVector& alpha, int nu_index) {
  const BestApproximant ba = nth_best_approximant(alpha, nu_index);
  const int d = alpha.dim;
  ApproximantLattice lat;
  lat.q = ba.q;
  lat.p = ba.p;
  lat.basis_den = ba.q;
  std::vector<std::vector<long long>> rows;
  rows.push_back(ba.p);  // p (numerators of p/q scaled by q)
  for (int i = 0; i < d; ++i) {
    std::vector<long long> e(static_cast<size_t>(d), 0);
    e[static_cast<size_t>(i)] = ba.q;
    rows.push_back(std::move(e));
  }
  lat.basis_num = hermite_rows(std::move(rows), d);
  for (const auto& r : lat.basis_num) {
    bool all_zero = true;
    for (long long v : r) all_zero = all_zero && v == 0;
    if (all_zero) throw std::runtime_error("approximant_lattice: basis not full rank");
  }
  return lat;
}

LatticeStats approximant_lattice_stats(const BadVector& alpha, int nu_index, int grid_per_axis) {
  const int d = alpha.dim;
  if (d > 3) throw std::invalid_argument("approximant_lattice_stats: d <= 3 required");
  const BestApproximant ba = nth_best_approximant(alpha, nu_index);
  const long long q = ba.q;

  if (d == 1) {
    const long long g = std::gcd(std::llabs(ba.p[0]), q);
    return LatticeStats{static_cast<double>(q / g),
                        static_cast<double>(g) / (2.0 * static_cast<double>(q))};
  }

  long long gall = q;
  for (long long v : ba.p) gall = std::gcd(gall, std::llabs(v));
  const double det_dual = static_cast<double>(q / gall);

  // Minkowski bound on the shortest dual vector gives a finite search box.
  double renum;
  if (d == 2)
    renum = 2.0 * std::sqrt(det_dual / M_PI);
  else
    renum = std::cbrt(6.0 * det_dual / M_PI);
  const long long R = static_cast<long long>(std::ceil(renum)) + 1;
  if (std::pow(2.0 * static_cast<double>(R) + 1.0, d) > 4e9)
    throw std::runtime_error("approximant_lattice_stats: dual enumeration exceeds budget");

  double mu1 = std::numeric_limits<double>::infinity();
  std::vector<long long> v(static_cast<size_t>(d), -R);
  for (;;) {
    bool zero = true;
    long long dotpv = 0;
    double n2 = 0.0;
    for (int j = 0; j < d; ++j) {
      const long long c = v[static_cast<size_t>(j)];
      if (c != 0) zero = false;
      dotpv += c * ba.p[static_cast<size_t>(j)];
      n2 += static_cast<double>(c) * static_cast<double>(c);
    }
    if (!zero && ((dotpv % q) + q) % q == 0) mu1 = std::min(mu1, std::sqrt(n2));
    int i = 0;
    while (i < d && v[static_cast<size_t>(i)] == R) {
      v[static_cast<size_t>(i)] = -R;
      ++i;
    }
    if (i == d) break;
    ++v[static_cast<size_t>(i)];
  }

  // Covering radius: fine-grid maximization of the distance to the lattice
  // over [0,1)^d; representatives j*p/q mod 1 with unit shifts.
  std::vector<double> reps;
  for (long long j = 0; j < q; ++j)
    for (int c = 0; c < d; ++c)
      reps.push_back(frac(static_cast<double>(j) * static_cast<double>(ba.p[static_cast<size_t>(c)]) /
                          static_cast<double>(q)));
  const long long nrep = q;
  const int G = grid_per_axis;
  double rho = 0.0;
  std::vector<int> idx(static_cast<size_t>(d), 0);
  std::vector<double> gpt(static_cast<size_t>(d));
  for (;;) {
    for (int j = 0; j < d; ++j)
      gpt[static_cast<size_t>(j)] = (static_cast<double>(idx[static_cast<size_t>(j)]) + 0.5) / G;
    double best = std::numeric_limits<double>::infinity();
    for (long long r = 0; r < nrep; ++r) {
      double s = 0.0;
      for (int c = 0; c < d; ++c) {
        double e = std::fabs(reps[static_cast<size_t>(r * d + c)] - gpt[static_cast<size_t>(c)]);
        e = std::min(e, 1.0 - e);  // unit shifts collapse to toral distance
        s += e * e;
      }
      best = std::min(best, s);
    }
    rho = std::max(rho, std::sqrt(best));
    int i = 0;
    while (i < d && idx[static_cast<size_t>(i)] == G - 1) {
      idx[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == d) break;
    ++idx[static_cast<size_t>(i)];
  }
  return LatticeStats{mu1, rho};
}

}  // namespace delone
