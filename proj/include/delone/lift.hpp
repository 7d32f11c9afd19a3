#pragma once

#include <cstdint>

#include "delone/dioph.hpp"
#include "delone/geom.hpp"

namespace delone {

/// Radial contraction of the cube [-1,1]^m onto the closed unit ball:
/// x = rho*u maps to rho*||u||_inf*u, the boundary of the cube lands on the
/// unit sphere and 0 is fixed.
Vec cube_contraction(std::span<const double> x);

/// Stereographic projections R^d -> S^d from the north / south pole.
UnitVector stereo_north(std::span<const double> x);
UnitVector stereo_south(std::span<const double> x);

/// Hemisphere charts on the closed unit cube: branch 1 covers the southern
/// hemisphere, branch 2 the northern one, and both agree on the cube
/// boundary whose image is the equator.
UnitVector tau(int branch, std::span<const double> x);

/// Toral sequence x_k = {k*alpha} lifted to S^d with the parity split:
/// even k through branch 1, odd k through branch 2. Ambent dimension is
/// alpha.dim + 1.
struct LiftedSequence {
  BadVector alpha;
  int ambient_dim = 0;
};

LiftedSequence make_lifted(BadVector alpha);

Vec torus_point(const LiftedSequence& seq, std::int64_t k);  // {k*alpha}
UnitVector lifted_u(std::int64_t k, const LiftedSequence& seq);

/// Decomposition of a circle sequence value into the one-dimensional billiard
/// coordinate and the branch it came from; reconstruction is
/// circle_lift_point, with point(branch 1, x) = e(x/2) and
/// point(branch 2, x) = e(-x/2), e(t) = (cos 2*pi*t, sin 2*pi*t).
struct CircleLift {
  double x = 0.0;
  int branch = 0;
};

CircleLift circle_lift_decompose(double y);
UnitVector circle_lift_point(const CircleLift& c);
UnitVector circle_point(double y);  // e(y)

}  // namespace delone
