#include "delone/quasi.hpp"

#include <cmath>
#include <stdexcept>

namespace delone {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

namespace {

double frac(double x) { return x - std::floor(x); }

// Real root > 1 of x^{m} = x + 1.
double harmonious_root(int m) {
  double r = 1.3;
  for (int it = 0; it < 128; ++it) {
    const double f = std::pow(r, m) - r - 1.0;
    const double df = m * std::pow(r, m - 1) - 1.0;
    const double r2 = r - f / df;
    if (std::fabs(r2 - r) < 1e-16) return r2;
    r = r2;
  }
  return r;
}

}  // namespace

KroneckerSequence::KroneckerSequence(int dim, std::uint64_t seed) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("KroneckerSequence: dim >= 1 required");
  const double g = harmonious_root(dim + 1);
  step_.resize(dim);
  double p = 1.0;
  for (int i = 0; i < dim; ++i) {
    p /= g;
    step_[i] = p;
  }
  SplitMix64 mix(seed);
  state_.resize(dim);
  for (int i = 0; i < dim; ++i) state_[i] = mix.next_double();
}

void KroneckerSequence::next(std::span<double> out) {
  for (int i = 0; i < dim_; ++i) {
    state_[i] = frac(state_[i] + step_[i]);
    out[i] = state_[i];
  }
}

std::vector<double> KroneckerSequence::next() {
  std::vector<double> out(dim_);
  next(out);
  return out;
}

SphereDirections::SphereDirections(int sphere_dim, std::uint64_t seed)
    : d_(sphere_dim), seq_(sphere_dim >= 3 ? sphere_dim + 1 : sphere_dim, seed) {
  if (sphere_dim < 1) throw std::invalid_argument("SphereDirections: sphere_dim >= 1");
}

void SphereDirections::next(std::span<double> out) {
  if (d_ == 1) {
    double t;
    seq_.next({&t, 1});
    const double a = 2.0 * M_PI * t;
    out[0] = std::cos(a);
    out[1] = std::sin(a);
    return;
  }
  if (d_ == 2) {
    double t[2];
    seq_.next(t);
    const double z = 2.0 * t[0] - 1.0;
    const double a = 2.0 * M_PI * t[1];
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    out[0] = r * std::cos(a);
    out[1] = r * std::sin(a);
    out[2] = z;
    return;
  }
  // d >= 3: quasi-uniform via inverse-normal transform of a Kronecker point.
  std::vector<double> t(d_ + 1);
  double s = 0.0;
  do {
    seq_.next(t);
    s = 0.0;
    for (int i = 0; i <= d_; ++i) {
      const double g = inverse_normal_cdf(std::min(std::max(t[i], 1e-12), 1.0 - 1e-12));
      t[i] = g;
      s += g * g;
    }
  } while (s == 0.0);
  s = std::sqrt(s);
  for (int i = 0; i <= d_; ++i) out[i] = t[i] / s;
}

UnitVector SphereDirections::next() {
  Vec v(static_cast<size_t>(d_) + 1);
  next(v);
  return UnitVector::of_direction(std::move(v));
}

double inverse_normal_cdf(double p) {
  if (!(p > 0.0) || !(p < 1.0))
    throw std::invalid_argument("inverse_normal_cdf: p in (0,1) required");
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace delone
