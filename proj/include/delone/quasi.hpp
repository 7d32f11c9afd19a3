#pragma once

#include <cstdint>
#include <vector>

#include "delone/geom.hpp"

namespace delone {

/// Counter-based 64-bit mixer; used only to derive deterministic offsets
/// from user seeds.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  double next_double();  // in [0, 1)
};

/// Additive low-discrepancy recurrence on [0,1)^dim. Step vector is the
/// power basis of the real root of x^{dim+1} = x + 1, offsets derive from
/// the seed, so streams are reproducible for a fixed (dim, seed).
class KroneckerSequence {
 public:
  KroneckerSequence(int dim, std::uint64_t seed);
  void next(std::span<double> out);
  std::vector<double> next();
  int dim() const { return dim_; }

 private:
  int dim_;
  std::vector<double> step_;
  std::vector<double> state_;
};

/// Deterministic quasi-uniform directions on S^d (ambient dimension d+1).
class SphereDirections {
 public:
  SphereDirections(int sphere_dim, std::uint64_t seed);
  UnitVector next();
  void next(std::span<double> out);  // ambient_dim() values
  int ambient_dim() const { return d_ + 1; }

 private:
  int d_;
  KroneckerSequence seq_;
};

/// Inverse of the standard normal CDF (Acklam's rational approximation,
/// relative error ~1e-9); enough for direction sampling in d >= 3.
double inverse_normal_cdf(double p);

}  // namespace delone
