#pragma once

#include <array>
#include <vector>

#include "vortexlab/vortex.hpp"

namespace vortexlab {

struct LimitingZero {
  double x = 0.0, y = 0.0;  // located zero (site coordinates)
  int q = 0;                // integer weight from winding counts
  bool from_alpha = false;
};

/// Limiting configuration in the simple gauge h = sqrt(|beta|/|alpha|):
/// |alpha'| = |beta'| away from the masked zero cells and the weights sum
/// to 2d.
struct LimitingState {
  std::vector<double> h;          // gauge factor; 0 on masked cells
  std::vector<unsigned char> mask;
  std::array<TwistedField, 2> alpha, beta;  // gauged sections
  std::vector<LimitingZero> zeros;
  double mask_radius = 0.0;
};

/// Builds the simple-gauge limiting state. Zeros are located by
/// modulus-argmin plus winding counts on small lattice loops;
/// q = winding(alpha) - winding(beta). Throws "zeros too close" when two
/// zeros are nearer than 3 mask_radius and "zero on mask boundary" when a
/// winding loop is ambiguous.
LimitingState simple_gauge(const TorusGrid& grid, const HolomorphicTriple& triple,
                           double mask_radius);

/// Least-squares slope of log|field| against log r on circles around the
/// zero (geometric mean over 32 angles, bilinear interpolation). Requires
/// at least 4 radii, all larger than two grid spacings; throws
/// "insufficient resolution" otherwise.
double vanishing_exponent(const TorusGrid& grid, const std::vector<double>& modulus,
                          std::array<double, 2> zero_point,
                          const std::vector<double>& radii);

struct SweepRecord {
  double t = 0.0;
  KWSolution f_t;
  std::vector<LimitingZero> zeros;
  std::vector<double> per_zero_flux;   // int_{B(x, r)} i * F_{A'}
  double global_l2_alpha_minus_beta = 0.0;
  int kw_iters = 0;
  double residual = 0.0;
};

/// Concentration sweep: for each t solves the scaled vortex equation in
/// complex gauge (P = |alpha|^2/t^2, Q = |beta|^2/t^2), records the ball
/// flux around every zero (limit pi q) and the L2 defect of
/// |alpha'| - |beta'|. Entries are independent solves ordered by t;
/// jobs > 1 runs them concurrently.
std::vector<SweepRecord> t_sweep(const TorusGrid& grid, const HolomorphicTriple& triple,
                                 std::vector<double> t_list, double tau,
                                 double ball_radius, int jobs = 1);

}  // namespace vortexlab
