#pragma once

#include <array>
#include <vector>

#include "vortexlab/connection.hpp"
#include "vortexlab/grid.hpp"

namespace vortexlab {

/// Twisted Dolbeault problem: one unitary connection per line-bundle summand
/// of the coefficient bundle. For the split rank-2 case the two component
/// degrees must sum to 2 deg(L).
struct DolbeaultProblem {
  int n = 0;
  std::vector<LatticeConnection> components;
  std::vector<int> degrees;

  DolbeaultProblem(const TorusGrid& grid, std::vector<LatticeConnection> comps);
};

struct CohomologyReport {
  int h0 = 0;
  int h1 = 0;
  std::vector<double> singular_values;  // descending; the kernel-extraction spectrum
  double gap_ratio = 0.0;               // smallest kept / largest dropped
};

/// Numerical h^0/h^1 of the twisted Dolbeault complex.
///
/// The kernel extraction runs on a doubler-free covariant discretization
/// with exact chirality bookkeeping (a Ginsparg-Wilson overlap operator
/// built from the link phases): zero modes of positive chirality count h^0,
/// the adjoint block gives h^1, and h0 - h1 reproduces the integer index
/// exactly. Near-zero singular values are those below rank_tol * largest.
/// Throws "unreliable rank" when the kept/dropped gap falls under 1e3.
///
/// Connections whose link angles do not depend on the row index are
/// block-diagonalized exactly by a column Fourier transform; general
/// connections take the dense route (use small n there).
CohomologyReport h0(const DolbeaultProblem& problem, double rank_tol = 1e-6);

/// Closed-form expected index/dimension of the deformation complex
/// 0 -> O -> (sum of line bundles of the given degrees) -> 0 at the given
/// genus: sum_c (deg_c + 1 - g) - (1 - g). Supports genus 0, 1, 2.
int riemann_roch_expected(int genus, const std::vector<int>& degrees);

/// Expected index of the obstruction complex attached to a degree-k
/// auxiliary line bundle at the given genus; vanishes identically.
int fueter_complex_index(int genus, int k);

struct FueterObstructionReport {
  bool exists = false;
  int degree_cap = 0;  // search bound on deg(N) used to terminate
};

/// Existence of an auxiliary line bundle N with h0(N^2) > 0 and
/// h0(E (x) K^{1/2} (x) N^{-1}) > 0 for the split background E = M (+) M^{-1}
/// on the square torus (trivial K^{1/2}), decided by exact divisor-class
/// arithmetic: true iff m > 0, or m = 0 and the class is 2-torsion.
FueterObstructionReport fueter_obstruction(int m, std::array<double, 2> jacobian_class);
bool fueter_obstruction_exists(int m, std::array<double, 2> jacobian_class);

}  // namespace vortexlab
