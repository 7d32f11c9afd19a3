#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "delone/pointset.hpp"
#include "delone/spiral.hpp"

namespace delone {

struct SeparationReport {
  double kappa = 0.0;
  std::int64_t k_min = 0, k_max = 0;
  // (decade lower bound, min of k^{1/n} * d(u_{k+m}, u_k) within the decade)
  std::vector<std::pair<std::int64_t, double>> per_decade_min;
  double global_min = 0.0;
  std::int64_t arg_k = 0;
  std::int64_t arg_m = 0;

  // Finite prefixes cannot certify a liminf; the certificate passes only if
  // no decade minimum collapses below half the median decade minimum.
  bool non_decaying() const;
  bool pass() const { return global_min > 0.0 && non_decaying(); }
};

/// Exact minimum of k^{1/n} * d(u_{k+m}, u_k) over k in [k_min, k_max] and
/// 1 <= |m| <= floor(kappa * k^{1-1/n}), with k+m clamped to valid indices.
SeparationReport separation_statistic(const SphericalSource& u, double kappa,
                                      std::int64_t k_min, std::int64_t k_max);

/// Same statistic for a toral sequence x_k (flat, dim entries per point)
/// with plain Euclidean distances in the unit box; used to check that
/// separation survives the lift.
double toral_separation_statistic(std::span<const double> x_flat, int dim,
                                  double kappa, std::int64_t k_min, std::int64_t k_max);

struct CoveringReport {
  double c = 0.0, C = 0.0;
  std::vector<std::int64_t> k_samples;
  int directions_per_k = 0;
  std::uint64_t seed = 0;
  double worst_defect = 0.0;  // max over samples of max(0, k^{1/n}*min_dist - C)
  bool pass = false;
};

/// For each sampled k and quasi-uniform direction v, checks that some
/// u_{k+m} with |m| <= c*k^{1-1/n} lies within C*k^{-1/n} of v.
CoveringReport covering_check(const SphericalSource& u, double c, double C,
                              std::span<const std::int64_t> k_samples, int n_dirs,
                              std::uint64_t seed);

/// Largest normalized hole k^{1/n} * min-window-distance seen at k_cal over
/// n_dirs directions; a covering constant C is usually chosen as a multiple
/// of this value and then held out at larger k.
double covering_calibration(const SphericalSource& u, double c, std::int64_t k_cal,
                            int n_dirs, std::uint64_t seed);

/// Exact minimal pairwise distance via a uniform-grid fixed-radius index;
/// the grid cell is the current best estimate, rebuilt geometrically when
/// the estimate halves. Matches the quadratic scan bit for bit.
double min_pairwise_distance(const PointSet& pts);

/// Max over quasi-random samples in the annulus r_lo <= ||x|| <= r_hi of the
/// distance to the nearest set point (a lower bound for the true covering
/// radius over that region).
double covering_radius_estimate(const PointSet& pts, double r_lo, double r_hi,
                                std::int64_t samples, std::uint64_t seed);

struct GapReport {
  double h = 0.0;
  std::vector<double> R_values;
  std::vector<double> min_gap;  // g_R
  std::vector<double> max_gap;  // G_R
  double min_stat = 0.0;        // min over R of R*g_R
  double max_stat = 0.0;        // max over R of R*G_R
};

/// Circular gap statistics of {x_k mod 1 : R^2 <= k < (R+h)^2} per window.
GapReport marklof_gaps(const std::function<double(std::int64_t)>& x, double h,
                       std::span<const double> R_values);

struct DensityReport {
  std::vector<double> R_values;
  std::vector<std::int64_t> counts;   // #{k : ||s_k|| <= R}
  std::vector<double> normalized;     // counts / R^n
  int caps = 0;
  std::uint64_t seed = 0;
  double cap_discrepancy = 0.0;       // max |empirical cap share - exact share|
};

DensityReport density_scan(const SpiralSet& spiral, std::span<const double> R_values,
                           int caps, std::uint64_t seed);

/// Normalized measure of a geodesic cap of radius rho on S^d: exact for
/// d = 1, 2; adaptive quadrature to 1e-10 otherwise.
double cap_measure_share(int d, double rho);

}  // namespace delone
