#include "vortexlab/kazdan_warner.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vortexlab {

namespace {

double linf(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s = std::max(s, std::abs(x));
  return s;
}

double l2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

struct Workspace {
  const TorusGrid& grid;
  const std::vector<double>&P, &Q, &w;
  std::vector<double> lap, res;

  void residual(const std::vector<double>& f, std::vector<double>& out) {
    grid.laplacian(f, lap);
    out.resize(f.size());
    for (size_t k = 0; k < f.size(); ++k)
      out[k] = lap[k] + P[k] * std::exp(2.0 * f[k]) - Q[k] * std::exp(-2.0 * f[k]) - w[k];
  }
};

// PCG for (Delta + a) x = b with the spectral preconditioner (Delta + mean a)^{-1}.
void linear_solve(const TorusGrid& grid, const std::vector<double>& a,
                  const std::vector<double>& b, std::vector<double>& x) {
  const size_t m = b.size();
  const double kappa = std::max(grid.mean(a), 1e-30);
  x.assign(m, 0.0);
  std::vector<double> r = b, z(m), p(m), ap(m), lap(m);
  grid.helmholtz_inverse(r, kappa, z);
  p = z;
  double rz = 0.0;
  for (size_t k = 0; k < m; ++k) rz += r[k] * z[k];
  const double target = 1e-2 * l2(b);
  for (int it = 0; it < 500; ++it) {
    grid.laplacian(p, lap);
    for (size_t k = 0; k < m; ++k) ap[k] = lap[k] + a[k] * p[k];
    double pap = 0.0;
    for (size_t k = 0; k < m; ++k) pap += p[k] * ap[k];
    if (pap <= 0.0) break;
    const double alpha = rz / pap;
    for (size_t k = 0; k < m; ++k) {
      x[k] += alpha * p[k];
      r[k] -= alpha * ap[k];
    }
    if (l2(r) < target) break;
    grid.helmholtz_inverse(r, kappa, z);
    double rz2 = 0.0;
    for (size_t k = 0; k < m; ++k) rz2 += r[k] * z[k];
    const double beta = rz2 / rz;
    rz = rz2;
    for (size_t k = 0; k < m; ++k) p[k] = z[k] + beta * p[k];
  }
}

void validate(const TorusGrid& grid, const KWProblem& prob) {
  const size_t m = size_t(prob.n) * prob.n;
  if (prob.P.size() != m || prob.Q.size() != m || prob.w.size() != m)
    throw std::invalid_argument("solve_kw: field sizes do not match n");
  for (size_t k = 0; k < m; ++k)
    if (prob.P[k] < 0.0 || prob.Q[k] < 0.0)
      throw std::invalid_argument("hypotheses violated: P, Q must be nonnegative");
  const double ip = grid.mean(prob.P), iq = grid.mean(prob.Q), iw = grid.mean(prob.w);
  const double scale = std::max({ip, iq, linf(prob.w), 1.0});
  if (prob.case_tag == KWCase::lemma) {
    if (ip - iq <= 1e-10 * scale || iw <= 1e-10 * scale)
      throw std::invalid_argument("hypotheses violated: lemma case needs int(P-Q) > 0 and int(w) > 0");
  } else {
    if (std::abs(iw) > 1e-10 * scale)
      throw std::invalid_argument("hypotheses violated: remark case needs int(w) = 0");
    bool pzero = true, qzero = true;
    for (size_t k = 0; k < m; ++k) {
      if (prob.P[k] != 0.0) pzero = false;
      if (prob.Q[k] != 0.0) qzero = false;
    }
    if (pzero || qzero)
      throw std::invalid_argument("hypotheses violated: remark case needs P and Q not identically zero");
  }
}

}  // namespace

KWSolution solve_kw(const TorusGrid& grid, const KWProblem& problem, double tol,
                    const std::vector<double>* initial_guess) {
  if (tol < 1e-12) throw std::invalid_argument("solve_kw: tol must be >= 1e-12");
  validate(grid, problem);
  const size_t m = size_t(problem.n) * problem.n;

  // Remark-case balancing: P' = e^s P, Q' = e^{-s} Q with
  // s = log(int Q / int P)/2 makes int(P' - Q') = 0; the solution of the
  // balanced problem shifts back by s/2.
  double shift = 0.0;
  std::vector<double> P = problem.P, Q = problem.Q, w = problem.w;
  if (problem.case_tag == KWCase::remark) {
    const double s = 0.5 * std::log(grid.mean(Q) / grid.mean(P));
    const double es = std::exp(s);
    for (size_t k = 0; k < m; ++k) {
      P[k] *= es;
      Q[k] /= es;
    }
    shift = 0.5 * s;
    const double mw = grid.mean(w);  // exact zero-mean projection of a tiny defect
    for (double& x : w) x -= mw;
  }

  Workspace ws{grid, P, Q, w, {}, {}};
  std::vector<double> f;
  if (initial_guess) {
    if (initial_guess->size() != m) throw std::invalid_argument("solve_kw: bad initial guess size");
    f = *initial_guess;
    if (problem.case_tag == KWCase::remark)
      for (double& x : f) x -= shift;  // move the guess to the balanced problem
  } else {
    grid.poisson(w, f);  // Delta v = w - mean(w)
  }

  KWSolution sol;
  std::vector<double> r, delta, a(m), fnext, rnext;
  ws.residual(f, r);
  double rn = linf(r);
  while (rn > tol && sol.newton_iters < 60) {
    ++sol.newton_iters;
    for (size_t k = 0; k < m; ++k)
      a[k] = 2.0 * P[k] * std::exp(2.0 * f[k]) + 2.0 * Q[k] * std::exp(-2.0 * f[k]);
    for (double& x : r) x = -x;
    linear_solve(grid, a, r, delta);
    for (double& x : r) x = -x;
    const double r0 = l2(r);
    double step = 1.0;
    int halvings = 0;
    for (;;) {
      fnext = f;
      for (size_t k = 0; k < m; ++k) fnext[k] += step * delta[k];
      ws.residual(fnext, rnext);
      if (l2(rnext) < r0 || halvings >= 30) break;
      step *= 0.5;
      ++halvings;
      ++sol.damping_events;
    }
    f.swap(fnext);
    r.swap(rnext);
    rn = linf(r);
  }
  if (rn > tol)
    throw std::runtime_error("stalled: best residual " + std::to_string(rn) +
                             " after 60 Newton steps");
  if (shift != 0.0)
    for (double& x : f) x += shift;
  sol.f = std::move(f);
  sol.residual_linf = rn;
  return sol;
}

double kw_verify(const TorusGrid& grid, const KWProblem& problem,
                 const std::vector<double>& f) {
  const size_t m = size_t(problem.n) * problem.n;
  if (f.size() != m) throw std::invalid_argument("kw_verify: size mismatch");
  std::vector<double> lap;
  grid.laplacian(f, lap);
  double s = 0.0;
  for (size_t k = 0; k < m; ++k) {
    const double r = lap[k] + problem.P[k] * std::exp(2.0 * f[k]) -
                     problem.Q[k] * std::exp(-2.0 * f[k]) - problem.w[k];
    s = std::max(s, std::abs(r));
  }
  return s;
}

}  // namespace vortexlab
