#pragma once

#include <array>
#include <utility>
#include <vector>

#include "vortexlab/field.hpp"

namespace vortexlab {

/// Prescription for a degree-m holomorphic section on the square torus:
/// the zero divisor (m simple points) and the lattice-sum cutoff of the
/// underlying theta series. The sum of zero_points modulo Z^2 fixes the
/// bundle's Jacobian class.
struct ThetaSpec {
  int degree = 1;                                 // m = number of zeros
  std::vector<std::array<double, 2>> zero_points; // in [0,1)^2
  int truncation = 8;                             // series cutoff, >= 6
};

/// First Jacobi theta function at modulus i (periods 1 and i):
/// theta1(z+1) = -theta1(z), theta1(z+i) = -exp(pi - 2 pi i z) theta1(z),
/// simple zero at z = 0.
cd jacobi_theta1(cd z, int truncation);

/// Builds the section as a product of translated, unitary-gauge-corrected
/// theta factors together with the compatible constant-curvature connection
/// of degree m shifted to the matching Jacobian class. The field vanishes
/// only at spec.zero_points (to grid resolution); the discrete dbar residual
/// is O(1/n^2).
///
/// Throws when truncation < 6, when the zero count disagrees with the
/// degree, or when two zeros coincide within one grid spacing.
std::pair<TwistedField, LatticeConnection> theta_section(const TorusGrid& grid,
                                                         const ThetaSpec& spec);

}  // namespace vortexlab
