#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "delone/geom.hpp"
#include "delone/lift.hpp"
#include "delone/pointset.hpp"

namespace delone {

/// Direction on the unit circle after k steps of angle alpha (radians):
/// (cos k*alpha, sin k*alpha).
UnitVector fermat_u(std::int64_t k, double alpha);

/// k^{1/n}, polished so that exact integer powers round-trip.
double radial_scale(std::int64_t k, int n);

/// A spherical sequence (u_k)_{k>=1}. Closed-form kinds (fermat, lifted)
/// evaluate any index; custom kinds carry a materialized prefix.
class SphericalSource {
 public:
  static SphericalSource fermat(double alpha);
  static SphericalSource lifted(BadVector alpha);
  static SphericalSource custom(std::vector<UnitVector> pts, std::string label);

  int ambient_dim() const { return ambient_dim_; }
  std::int64_t max_index() const;
  UnitVector direction(std::int64_t k) const;
  const std::string& label() const { return label_; }

 private:
  struct Fermat {
    double alpha;
  };
  struct Lifted {
    LiftedSequence seq;
  };
  struct Custom {
    std::shared_ptr<const std::vector<UnitVector>> pts;
  };

  SphericalSource(std::variant<Fermat, Lifted, Custom> kind, int n, std::string label)
      : kind_(std::move(kind)), ambient_dim_(n), label_(std::move(label)) {}

  std::variant<Fermat, Lifted, Custom> kind_;
  int ambient_dim_;
  std::string label_;
};

struct SpiralSet {
  int ambient_dim = 0;
  std::string source_label;
  PointSet points;  // s_1 ... s_count

  std::int64_t count() const { return points.size(); }
  std::span<const double> point(std::int64_t k) const { return points.point(k - 1); }
};

/// s_k = k^{1/n} * u_k.
Vec spiral_point(std::int64_t k, const SphericalSource& source);

/// Materializes s_1..s_count; deterministic for a fixed source.
SpiralSet generate(const SphericalSource& source, std::int64_t count);

struct RatioScanResult {
  double liminf_est = 0.0;
  double limsup_est = 0.0;
};

/// Finite-prefix estimates of f(k)/k^{1/n} over the tail half of the input.
RatioScanResult akiyama_ratio_scan(
    std::span<const std::pair<std::int64_t, double>> f_values, int n);

}  // namespace delone
