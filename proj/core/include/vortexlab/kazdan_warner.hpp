#pragma once

#include <string>
#include <vector>

#include "vortexlab/grid.hpp"

namespace vortexlab {

enum class KWCase {
  lemma,   // int(P - Q) > 0 and int(w) > 0
  remark,  // int(w) = 0 and neither P nor Q identically zero
};

/// Data of Delta f + P e^{2f} - Q e^{-2f} = w with P, Q >= 0 pointwise.
struct KWProblem {
  int n = 0;
  std::vector<double> P, Q, w;
  KWCase case_tag = KWCase::lemma;
};

struct KWSolution {
  std::vector<double> f;
  double residual_linf = 0.0;
  int newton_iters = 0;
  int damping_events = 0;
};

/// Damped inexact Newton solve of the scalar equation above.
///
/// Contract: (i) the remark case is pre-balanced by the constant
/// substitution P' = e^s P, Q' = e^{-s} Q with s = log(int Q / int P)/2,
/// whose solution shifts back by s/2, so that int(P' - Q') = 0;
/// (ii) the initial guess is the mean-zero solution of
/// Delta v = w - mean(w); (iii) each step solves the SPD linearization
/// Delta + 2 P e^{2f} + 2 Q e^{-2f} by preconditioned conjugate gradients
/// ((Delta + kappa)^{-1} spectral preconditioner, relative tolerance 1e-2,
/// cap 500) with plain step halving (max 30) until the residual norm
/// decreases. Deterministic across runs.
///
/// Throws "hypotheses violated" when the case tag is inconsistent with the
/// data (to 1e-10, scale-relative), and "stalled" when 60 Newton steps do
/// not reach tol (the exception message reports the best residual).
KWSolution solve_kw(const TorusGrid& grid, const KWProblem& problem, double tol,
                    const std::vector<double>* initial_guess = nullptr);

/// Sup-norm residual |Delta f + P e^{2f} - Q e^{-2f} - w|_inf.
double kw_verify(const TorusGrid& grid, const KWProblem& problem,
                 const std::vector<double>& f);

}  // namespace vortexlab
