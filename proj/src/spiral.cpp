#include "delone/spiral.hpp"

#include <cmath>
#include <stdexcept>

namespace delone {

UnitVector fermat_u(std::int64_t k, double alpha) {
  if (k < 1) throw std::invalid_argument("fermat_u: k >= 1 required");
  const double a = static_cast<double>(k) * alpha;
  return UnitVector({std::cos(a), std::sin(a)});
}

double radial_scale(std::int64_t k, int n) {
  if (k < 1) throw std::invalid_argument("radial_scale: k >= 1 required");
  if (n < 2) throw std::invalid_argument("radial_scale: n >= 2 required");
  const double kd = static_cast<double>(k);
  if (n == 2) return std::sqrt(kd);
  if (n == 3) return std::cbrt(kd);
  double r = std::pow(kd, 1.0 / n);
  // one Newton step so that exact n-th powers land on their integer root
  const double rn1 = std::pow(r, n - 1);
  r -= (rn1 * r - kd) / (n * rn1);
  return r;
}

SphericalSource SphericalSource::fermat(double alpha) {
  return SphericalSource(Fermat{alpha}, 2, "fermat(" + std::to_string(alpha) + ")");
}

SphericalSource SphericalSource::lifted(BadVector alpha) {
  const int n = alpha.dim + 1;
  std::string label = "lifted(" + alpha.label + ")";
  return SphericalSource(Lifted{make_lifted(std::move(alpha))}, n, std::move(label));
}

SphericalSource SphericalSource::custom(std::vector<UnitVector> pts, std::string label) {
  if (pts.empty()) throw std::invalid_argument("SphericalSource::custom: empty list");
  const int n = pts.front().dim();
  for (const auto& p : pts)
    if (p.dim() != n) throw std::invalid_argument("SphericalSource::custom: mixed dimensions");
  auto holder = std::make_shared<const std::vector<UnitVector>>(std::move(pts));
  return SphericalSource(Custom{std::move(holder)}, n, std::move(label));
}

std::int64_t SphericalSource::max_index() const {
  if (const auto* c = std::get_if<Custom>(&kind_))
    return static_cast<std::int64_t>(c->pts->size());
  return std::numeric_limits<std::int64_t>::max();
}

UnitVector SphericalSource::direction(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("SphericalSource: k >= 1 required");
  if (const auto* f = std::get_if<Fermat>(&kind_)) return fermat_u(k, f->alpha);
  if (const auto* l = std::get_if<Lifted>(&kind_)) return lifted_u(k, l->seq);
  const auto& pts = *std::get<Custom>(kind_).pts;
  if (k > static_cast<std::int64_t>(pts.size()))
    throw std::out_of_range("SphericalSource: index beyond materialized prefix");
  return pts[static_cast<size_t>(k - 1)];
}

Vec spiral_point(std::int64_t k, const SphericalSource& source) {
  const UnitVector u = source.direction(k);
  const double r = radial_scale(k, source.ambient_dim());
  Vec out(u.coords().begin(), u.coords().end());
  for (double& v : out) v *= r;
  return out;
}

SpiralSet generate(const SphericalSource& source, std::int64_t count) {
  if (count < 1) throw std::invalid_argument("generate: count >= 1 required");
  if (count > source.max_index())
    throw std::invalid_argument("generate: count beyond the source prefix");
  if (count > (std::int64_t{1} << 27))
    throw std::invalid_argument("generate: count beyond memory budget");
  SpiralSet out;
  out.ambient_dim = source.ambient_dim();
  out.source_label = source.label();
  out.points.dim = source.ambient_dim();
  out.points.data.reserve(static_cast<size_t>(count) * static_cast<size_t>(out.points.dim));
  for (std::int64_t k = 1; k <= count; ++k) {
    const Vec p = spiral_point(k, source);
    out.points.push_back(p);
  }
  return out;
}

RatioScanResult akiyama_ratio_scan(
    std::span<const std::pair<std::int64_t, double>> f_values, int n) {
  if (f_values.empty()) throw std::invalid_argument("akiyama_ratio_scan: empty input");
  std::int64_t prev = 0;
  for (const auto& [k, f] : f_values) {
    if (k <= prev) throw std::invalid_argument("akiyama_ratio_scan: k must be strictly increasing");
    if (!(f > 0.0)) throw std::invalid_argument("akiyama_ratio_scan: f(k) must be positive");
    prev = k;
  }
  const std::int64_t k_max = f_values.back().first;
  RatioScanResult r{std::numeric_limits<double>::infinity(), 0.0};
  bool any = false;
  for (const auto& [k, f] : f_values) {
    if (2 * k <= k_max) continue;  // tail half only
    const double ratio = f / radial_scale(k, n);
    r.liminf_est = std::min(r.liminf_est, ratio);
    r.limsup_est = std::max(r.limsup_est, ratio);
    any = true;
  }
  if (!any) {
    const auto& [k, f] = f_values.back();
    const double ratio = f / radial_scale(k, n);
    r = {ratio, ratio};
  }
  return r;
}

}  // namespace delone
