#include "delone/lift.hpp"

#include <cmath>
#include <stdexcept>

namespace delone {

namespace {

double frac(double x) { return x - std::floor(x); }

}  // namespace

Vec cube_contraction(std::span<const double> x) {
  const double ninf = norm_inf(x);
  if (ninf > 1.0 + kBoundaryTol)
    throw std::invalid_argument("cube_contraction: input outside [-1,1]^m");
  const double n2 = norm2(x);
  Vec out(x.begin(), x.end());
  if (n2 == 0.0) return out;
  const double scale = ninf / n2;
  for (double& v : out) v *= scale;
  return out;
}

UnitVector stereo_north(std::span<const double> x) {
  double n2 = 0.0;
  for (double v : x) n2 += v * v;
  Vec out(x.size() + 1);
  const double den = 1.0 + n2;
  for (size_t i = 0; i < x.size(); ++i) out[i] = 2.0 * x[i] / den;
  out.back() = (n2 - 1.0) / den;
  return UnitVector(std::move(out));
}

UnitVector stereo_south(std::span<const double> x) {
  double n2 = 0.0;
  for (double v : x) n2 += v * v;
  Vec out(x.size() + 1);
  const double den = 1.0 + n2;
  for (size_t i = 0; i < x.size(); ++i) out[i] = 2.0 * x[i] / den;
  out.back() = (1.0 - n2) / den;
  return UnitVector(std::move(out));
}

UnitVector tau(int branch, std::span<const double> x) {
  if (branch != 1 && branch != 2) throw std::invalid_argument("tau: branch must be 1 or 2");
  Vec y(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < -kBoundaryTol || x[i] > 1.0 + kBoundaryTol)
      throw std::invalid_argument("tau: input outside [0,1]^d");
    y[i] = 2.0 * x[i] - 1.0;
  }
  const Vec s = cube_contraction(y);
  return branch == 1 ? stereo_north(s) : stereo_south(s);
}

LiftedSequence make_lifted(BadVector alpha) {
  LiftedSequence seq;
  seq.ambient_dim = alpha.dim + 1;
  seq.alpha = std::move(alpha);
  return seq;
}

Vec torus_point(const LiftedSequence& seq, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("torus_point: k >= 1 required");
  Vec x(static_cast<size_t>(seq.alpha.dim));
  for (int j = 0; j < seq.alpha.dim; ++j)
    x[static_cast<size_t>(j)] = frac(static_cast<double>(k) * seq.alpha.alpha[static_cast<size_t>(j)]);
  return x;
}

UnitVector lifted_u(std::int64_t k, const LiftedSequence& seq) {
  const Vec x = torus_point(seq, k);
  return tau(k % 2 == 0 ? 1 : 2, x);
}

CircleLift circle_lift_decompose(double y) {
  const double f = frac(y);
  if (f < 0.5) return CircleLift{2.0 * f, 1};
  return CircleLift{2.0 - 2.0 * f, 2};
}

UnitVector circle_point(double y) {
  return UnitVector({std::cos(2.0 * M_PI * y), std::sin(2.0 * M_PI * y)});
}

UnitVector circle_lift_point(const CircleLift& c) {
  if (c.branch != 1 && c.branch != 2)
    throw std::invalid_argument("circle_lift_point: branch must be 1 or 2");
  return circle_point(c.branch == 1 ? c.x / 2.0 : -c.x / 2.0);
}

}  // namespace delone
