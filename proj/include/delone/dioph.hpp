#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace delone {

/// Vector alpha = (theta, theta^2, ..., theta^d) built from a real algebraic
/// integer theta of degree d+1, together with its minimal polynomial as an
/// empirical certificate of bad approximability.
struct BadVector {
  int dim = 0;                      // d
  std::vector<double> alpha;        // stored unreduced; callers take {k*alpha}
  std::vector<long long> min_poly;  // c0 + c1*x + ... + c_{d+1}*x^{d+1}
  double theta = 0.0;
  std::string label;
};

/// Default generator table: d=1 golden ratio, d=2 theta = 2cos(2pi/7),
/// d>=3 the real root in (1,2) of x^{d+1} - x - 1. Supported range 1..8.
BadVector make_bad_vector(int d);

/// Distance from x to the nearest integer (ties resolved to even).
double dist_to_nearest_int(double x);

/// min over 1 <= q <= q_max of q^{1/d} * ||q*alpha||_{Z^d}.
double badness_statistic(const BadVector& alpha, long long q_max);

/// min over nonzero integer b, ||b||_inf <= b_max, of ||alpha.b|| * ||b||_inf^d
/// by exhaustive enumeration. Throws if (2*b_max+1)^d - 1 exceeds the budget.
double transference_statistic(const BadVector& alpha, long long b_max,
                              std::uint64_t budget = 4'000'000);

struct BestApproximant {
  long long q = 0;
  std::vector<long long> p;
  double err = 0.0;  // ||q*alpha||_{Z^d} = max_j |q*alpha_j - p_j|
};

/// All q <= q_max achieving a strict running minimum of ||q*alpha||_{Z^d},
/// in increasing order.
std::vector<BestApproximant> best_approximants(const BadVector& alpha, long long q_max);

struct TorusDispersion {
  double value = 0.0;      // d=1: exact; d>=2: max over the sampling grid (lower bound)
  double grid_step = 0.0;  // 0 when exact; additive error is at most grid_step/2
  bool exact = false;
};

/// Sup-norm toral dispersion of a point set in [0,1)^d, d <= 3.
/// d=1 is exact (half the largest circular gap); d=2,3 use a regular grid
/// with the given per-axis resolution.
TorusDispersion torus_dispersion(std::span<const double> pts_flat, int dim,
                                 int grid_per_axis = 512);

enum class ParityFilter { none, even, odd };

struct DensityCertificate {
  double epsilon = 0.0;
  long long m = 0;                   // smallest prefix length used
  double achieved_dispersion = 0.0;  // <= epsilon
  double grid_step = 0.0;
  double empirical_k = 0.0;          // m * epsilon^d
};

/// Smallest M such that {q*alpha mod 1 : 1 <= q <= M, parity(q)} has
/// dispersion <= epsilon. Monotonicity of dispersion in the prefix makes
/// exponential + binary search exact. Throws if M would exceed the cap.
DensityCertificate epsilon_dense_bound(const BadVector& alpha, double epsilon,
                                       ParityFilter parity = ParityFilter::none,
                                       long long cap = 1'000'000,
                                       int grid_per_axis = 512);

/// Lattice generated by p/q together with Z^d; basis kept in integer
/// Hermite normal form over the common denominator q.
struct ApproximantLattice {
  long long q = 0;
  std::vector<long long> p;
  std::vector<std::vector<long long>> basis_num;  // d x d, row basis of q*L
  long long basis_den = 0;                        // = q
};

ApproximantLattice approximant_lattice(const BadVector& alpha, int nu_index);

struct LatticeStats {
  double mu1_dual = 0.0;        // shortest nonzero vector of the dual lattice
  double covering_radius = 0.0; // exact for d=1, grid lower bound for d=2,3
};

/// Shortest dual vector by exhaustive search inside a Minkowski-bound radius
/// and covering radius of the lattice of the nu-th best approximant
/// (1-based). d <= 3.
LatticeStats approximant_lattice_stats(const BadVector& alpha, int nu_index,
                                       int grid_per_axis = 512);

}  // namespace delone
