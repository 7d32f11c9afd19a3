#pragma once

#include <span>
#include <vector>

namespace delone {

using Vec = std::vector<double>;

// Shared tolerances for the geometric kernel. All reals are IEEE doubles.
inline constexpr double kUnitNormTol = 1e-12;
inline constexpr double kBoundaryTol = 1e-12;

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> x);
double norm_inf(std::span<const double> x);

/// Point of the unit sphere S^{n-1} in R^n, n >= 2.
///
/// Construction re-normalizes the coordinates; inputs whose norm is further
/// than kUnitNormTol from 1 are rejected so that silent scale bugs surface
/// early. Use of_direction() to normalize an arbitrary nonzero vector.
class UnitVector {
 public:
  explicit UnitVector(Vec coords);
  static UnitVector of_direction(Vec v);

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  std::span<const double> coords() const { return coords_; }
  const Vec& vec() const { return coords_; }

 private:
  struct Normalized {};
  UnitVector(Vec coords, Normalized) : coords_(std::move(coords)) {}
  Vec coords_;
};

/// x = radius * direction with radius > 0.
struct PolarPoint {
  double radius;
  UnitVector direction;
};

/// Geodesic ball {u : d(center, u) <= angular_radius}, radius in (0, pi].
struct SphericalCap {
  UnitVector center;
  double angular_radius;
};

SphericalCap make_cap(UnitVector center, double angular_radius);

/// arccos(u . v), with the dot product clamped to [-1, 1] so that
/// near-identical vectors do not produce NaN.
double geodesic_distance(const UnitVector& u, const UnitVector& v);

/// Raw-coordinate variant used by bulk scans.
double geodesic_distance(std::span<const double> u, std::span<const double> v);

PolarPoint polar_decompose(std::span<const double> x);

/// ||x - y||_2 / (|r - rho| + sqrt(r*rho) * d(u, v)).
/// Returns 0 as the designated sentinel when x and y coincide exactly.
double polar_distance_ratio(const PolarPoint& x, const PolarPoint& y);

bool cap_contains(const SphericalCap& cap, const UnitVector& u);

}  // namespace delone
