#pragma once

#include <array>
#include <complex>
#include <vector>

#include "vortexlab/grid.hpp"

namespace vortexlab {

/// Unitary link phases on grid edges: a connection on a degree-d line bundle.
///
/// Link angles are stored as real numbers (theta_x on the edge (i,j)->(i+1,j),
/// theta_y on (i,j)->(i,j+1), row-major), so every link phase has modulus 1
/// exactly and angle sums carry no branch ambiguity. Sections obey the wrap
/// rule f(x, y+1) = exp(-2 pi i d x) f(x, y), f(x+1, y) = f(x, y); crossing
/// the y-seam twists an x-link angle by +2 pi d / n per crossing.
struct LatticeConnection {
  int n = 0;
  int degree = 0;
  std::vector<double> theta_x;  // theta_x[i*n + j]
  std::vector<double> theta_y;

  LatticeConnection() = default;
  LatticeConnection(int n_, int degree_);

  /// Link angle accessors for arbitrary integer (i, j); seam twists applied.
  double angle_x(int i, int j) const;
  double angle_y(int i, int j) const;
  cd link_x(int i, int j) const;
  cd link_y(int i, int j) const;

  /// Counter-clockwise plaquette angle anchored at site (i, j).
  double plaquette_angle(int i, int j) const;

  /// True when every link angle is independent of the row index i
  /// (base + constant-class and theta-compatible connections are).
  bool row_invariant(double tol = 1e-13) const;
};

/// Constant-curvature connection of degree d: every plaquette carries the
/// angle -2 pi d / n^2.
LatticeConnection base_connection(const TorusGrid& grid, int d);

/// base_connection shifted by the flat Wilson-line pair that moves the
/// holomorphic structure to the Jacobian class labelled by c in [0,1)^2.
LatticeConnection base_connection_with_class(const TorusGrid& grid, int d,
                                             std::array<double, 2> c);

/// Total flux = (sum of plaquette angles) / (-2 pi), rounded to the integer
/// it must equal. Throws "non-quantized flux" when the pre-rounding value is
/// farther than 1e-8 from an integer.
int flux(const LatticeConnection& conn);

/// Pre-rounding deviation |raw - round(raw)| of the flux.
double flux_deviation(const LatticeConnection& conn);

/// Tensor-product connection (angles add, degrees add).
LatticeConnection compose(const LatticeConnection& a, const LatticeConnection& b);

/// Dual connection (angles negate, degree negates).
LatticeConnection inverse(const LatticeConnection& a);

/// Apply a unitary gauge transformation with phase field phi (radians):
/// sections rotate by exp(i phi), links absorb the phase differences.
LatticeConnection unitary_gauge(const LatticeConnection& conn,
                                const std::vector<double>& phi);

}  // namespace vortexlab
