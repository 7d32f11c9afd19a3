#include "delone/geom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace delone {

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: dimension mismatch");
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

double norm_inf(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s = std::max(s, std::fabs(v));
  return s;
}

UnitVector::UnitVector(Vec coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2)
    throw std::invalid_argument("UnitVector: dimension must be >= 2");
  const double n = norm2(coords_);
  if (std::fabs(n - 1.0) > kUnitNormTol)
    throw std::invalid_argument("UnitVector: norm deviates from 1 beyond tolerance");
  for (double& v : coords_) v /= n;
}

UnitVector UnitVector::of_direction(Vec v) {
  if (v.size() < 2)
    throw std::invalid_argument("UnitVector: dimension must be >= 2");
  const double n = norm2(v);
  if (n == 0.0) throw std::invalid_argument("UnitVector: zero vector has no direction");
  for (double& c : v) c /= n;
  return UnitVector(std::move(v), Normalized{});
}

SphericalCap make_cap(UnitVector center, double angular_radius) {
  if (!(angular_radius > 0.0) || angular_radius > M_PI)
    throw std::invalid_argument("SphericalCap: angular radius must lie in (0, pi]");
  return SphericalCap{std::move(center), angular_radius};
}

double geodesic_distance(std::span<const double> u, std::span<const double> v) {
  const double c = std::clamp(dot(u, v), -1.0, 1.0);
  return std::acos(c);
}

double geodesic_distance(const UnitVector& u, const UnitVector& v) {
  return geodesic_distance(u.coords(), v.coords());
}

PolarPoint polar_decompose(std::span<const double> x) {
  const double r = norm2(x);
  if (r == 0.0) throw std::invalid_argument("polar_decompose: zero vector");
  Vec dir(x.begin(), x.end());
  return PolarPoint{r, UnitVector::of_direction(std::move(dir))};
}

double polar_distance_ratio(const PolarPoint& x, const PolarPoint& y) {
  if (x.direction.dim() != y.direction.dim())
    throw std::invalid_argument("polar_distance_ratio: dimension mismatch");
  if (!(x.radius > 0.0) || !(y.radius > 0.0))
    throw std::invalid_argument("polar_distance_ratio: nonzero points required");
  double num = 0.0;
  for (int i = 0; i < x.direction.dim(); ++i) {
    const double d = x.radius * x.direction[i] - y.radius * y.direction[i];
    num += d * d;
  }
  num = std::sqrt(num);
  const double ang = geodesic_distance(x.direction, y.direction);
  const double den = std::fabs(x.radius - y.radius) + std::sqrt(x.radius * y.radius) * ang;
  if (den == 0.0) return 0.0;  // identical points
  return num / den;
}

bool cap_contains(const SphericalCap& cap, const UnitVector& u) {
  return geodesic_distance(cap.center, u) <= cap.angular_radius + kBoundaryTol;
}

}  // namespace delone
