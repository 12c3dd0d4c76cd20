#include "vortexlab/vortex.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vortexlab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sup_abs(const TwistedField& f) { return f.empty() ? 0.0 : f.linf_norm(); }

double dbar_sup(const TorusGrid& grid, const LatticeConnection& conn,
                const TwistedField& f) {
  if (f.empty() || f.is_zero()) return 0.0;
  return dbar(grid, conn, f).linf_norm();
}
}  // namespace

// Site-anchored curvature: the average of the four plaquette angles around
// the site, second-order consistent with plaquette-center values.
static double site_curvature_angle(const LatticeConnection& c, int i, int j) {
  return 0.25 * (c.plaquette_angle(i, j) + c.plaquette_angle(i - 1, j) +
                 c.plaquette_angle(i, j - 1) + c.plaquette_angle(i - 1, j - 1));
}

LatticeConnection HolomorphicTriple::alpha_connection(int k) const {
  return k == 0 ? compose(conn_m, conn) : compose(inverse(conn_m), conn);
}

LatticeConnection HolomorphicTriple::beta_connection(int k) const {
  return k == 0 ? compose(inverse(conn_m), inverse(conn))
                : compose(conn_m, inverse(conn));
}

bool HolomorphicTriple::alpha_zero() const {
  return (alpha[0].empty() || alpha[0].is_zero()) &&
         (alpha[1].empty() || alpha[1].is_zero());
}

bool HolomorphicTriple::beta_zero() const {
  return (beta[0].empty() || beta[0].is_zero()) &&
         (beta[1].empty() || beta[1].is_zero());
}

HolomorphicTriple theta_triple(
    const TorusGrid& grid, int m, int d,
    const std::array<std::vector<std::array<double, 2>>, 2>& alpha_zeros,
    const std::array<std::vector<std::array<double, 2>>, 2>& beta_zeros,
    double amplitude, int truncation) {
  const int n = grid.n();
  HolomorphicTriple t;
  t.n = n;
  t.d = d;
  t.m = m;
  // component degrees in M^{+-1} (x) L^{+-1}
  const int deg[4] = {m + d, -m + d, -m - d, m - d};
  // sign pattern of (conn_m, conn_l) per component
  const int sm[4] = {+1, -1, -1, +1};
  const int sl[4] = {+1, +1, -1, -1};

  struct Built {
    int comp;
    TwistedField field;
    LatticeConnection conn;
  };
  std::vector<Built> built;
  for (int c = 0; c < 4; ++c) {
    const auto& zs = (c < 2) ? alpha_zeros[c] : beta_zeros[c - 2];
    if (zs.empty()) continue;
    if (deg[c] <= 0)
      throw std::invalid_argument("theta_triple: zeros prescribed on a nonpositive-degree component");
    if (int(zs.size()) != deg[c])
      throw std::invalid_argument("theta_triple: zero count must equal the component degree");
    ThetaSpec spec{deg[c], zs, truncation};
    auto [field, conn] = theta_section(grid, spec);
    field.normalize();
    field.scale(amplitude);
    built.push_back({c, std::move(field), std::move(conn)});
  }
  if (built.empty()) throw std::invalid_argument("theta_triple: all sections are zero");

  // Solve sm * conn_m + sl * conn_l = C_component for the two factors.
  int ia = -1, ib = -1;
  for (size_t a = 0; a < built.size() && ib < 0; ++a)
    for (size_t b = a + 1; b < built.size() && ib < 0; ++b) {
      const int det = sm[built[a].comp] * sl[built[b].comp] -
                      sm[built[b].comp] * sl[built[a].comp];
      if (det != 0) { ia = int(a); ib = int(b); }
    }
  LatticeConnection cm(n, m), cl(n, d);
  if (ib >= 0) {
    const auto& A = built[ia];
    const auto& B = built[ib];
    const double det = sm[A.comp] * sl[B.comp] - sm[B.comp] * sl[A.comp];
    for (size_t k = 0; k < cm.theta_x.size(); ++k) {
      cm.theta_x[k] = (sl[B.comp] * A.conn.theta_x[k] - sl[A.comp] * B.conn.theta_x[k]) / det;
      cm.theta_y[k] = (sl[B.comp] * A.conn.theta_y[k] - sl[A.comp] * B.conn.theta_y[k]) / det;
      cl.theta_x[k] = (sm[A.comp] * B.conn.theta_x[k] - sm[B.comp] * A.conn.theta_x[k]) / det;
      cl.theta_y[k] = (sm[A.comp] * B.conn.theta_y[k] - sm[B.comp] * A.conn.theta_y[k]) / det;
    }
  } else {
    // one independent constraint: take the standard degree-m background
    cm = base_connection(grid, m);
    const auto& A = built.front();
    for (size_t k = 0; k < cl.theta_x.size(); ++k) {
      cl.theta_x[k] = sl[A.comp] * (A.conn.theta_x[k] - sm[A.comp] * cm.theta_x[k]);
      cl.theta_y[k] = sl[A.comp] * (A.conn.theta_y[k] - sm[A.comp] * cm.theta_y[k]);
    }
  }
  t.conn_m = std::move(cm);
  t.conn = std::move(cl);

  // consistency of any remaining constraints
  for (const auto& bu : built) {
    const LatticeConnection want =
        (bu.comp < 2) ? t.alpha_connection(bu.comp) : t.beta_connection(bu.comp - 2);
    for (size_t k = 0; k < want.theta_x.size(); ++k)
      if (std::abs(want.theta_x[k] - bu.conn.theta_x[k]) > 1e-9 ||
          std::abs(want.theta_y[k] - bu.conn.theta_y[k]) > 1e-9)
        throw std::invalid_argument(
            "theta_triple: prescribed zero divisors are not simultaneously compatible");
  }

  for (int c = 0; c < 4; ++c) {
    TwistedField* slot = (c < 2) ? &t.alpha[c] : &t.beta[c - 2];
    *slot = TwistedField(n, deg[c]);
  }
  double holo = 0.0;
  for (auto& bu : built) {
    TwistedField* slot = (bu.comp < 2) ? &t.alpha[bu.comp] : &t.beta[bu.comp - 2];
    *slot = std::move(bu.field);
    const LatticeConnection cc =
        (bu.comp < 2) ? t.alpha_connection(bu.comp) : t.beta_connection(bu.comp - 2);
    holo = std::max(holo, dbar_sup(grid, cc, *slot));
  }
  t.holo_residual = holo * n * n;  // the recorded constant C with residual C/n^2

  // pairing constraint alpha beta = 0 in H^0(K)
  double pairing = 0.0;
  for (size_t k = 0; k < t.alpha[0].v.size(); ++k)
    pairing = std::max(
        pairing, std::abs(t.alpha[0].v[k] * t.beta[0].v[k] + t.alpha[1].v[k] * t.beta[1].v[k]));
  const double pa = std::max(sup_abs(t.alpha[0]), sup_abs(t.alpha[1]));
  const double pb = std::max(sup_abs(t.beta[0]), sup_abs(t.beta[1]));
  if (pairing > 1e-10 * std::max(pa * pb, 1e-300))
    throw std::invalid_argument("theta_triple: pairing constraint alpha beta = 0 violated");
  return t;
}

std::array<double, 4> vortex_residual(const TorusGrid& grid,
                                      const HolomorphicTriple& t, double tau) {
  const int n = t.n;
  std::array<double, 4> r{0.0, 0.0, 0.0, 0.0};
  for (int k = 0; k < 2; ++k) {
    if (!t.alpha[k].empty() && !t.alpha[k].is_zero())
      r[0] = std::max(r[0], dbar_sup(grid, t.alpha_connection(k), t.alpha[k]));
    if (!t.beta[k].empty() && !t.beta[k].is_zero())
      r[1] = std::max(r[1], dbar_sup(grid, t.beta_connection(k), t.beta[k]));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const size_t k = size_t(i) * n + j;
      const cd p = t.alpha[0].v[k] * t.beta[0].v[k] + t.alpha[1].v[k] * t.beta[1].v[k];
      r[2] = std::max(r[2], std::abs(p));
      const double asq = std::norm(t.alpha[0].v[k]) + std::norm(t.alpha[1].v[k]);
      const double bsq = std::norm(t.beta[0].v[k]) + std::norm(t.beta[1].v[k]);
      const double curv =
          -site_curvature_angle(t.conn, i, j) * double(n) * n + asq - bsq - kTwoPi * tau;
      r[3] = std::max(r[3], std::abs(curv));
    }
  return r;
}

namespace {
// Link-angle shifts realizing the discrete (d - dbar) f: minus the
// y-derivative on x-edges, plus the x-derivative on y-edges, sampled
// spectrally at the edge midpoints. The total plaquette shift telescopes to
// zero, so the flux is exactly invariant.
void gauge_edge_shifts(const TorusGrid& grid, const std::vector<double>& f,
                       std::vector<double>& dthx, std::vector<double>& dthy) {
  std::vector<double> gx, gy;
  grid.ddy_at_x_edge(f, gx);
  grid.ddx_at_y_edge(f, gy);
  const int n = grid.n();
  dthx.resize(gx.size());
  dthy.resize(gy.size());
  for (size_t k = 0; k < gx.size(); ++k) {
    dthx[k] = -gx[k] / n;
    dthy[k] = gy[k] / n;
  }
}

// The exact lattice curvature operator of the gauge flow: applying the flow
// by f shifts the site-anchored curvature angle by -(1/n^2) (Lbar f).
// Computed through the same edge-shift code path as the flow itself, so the
// solved vortex system closes to round-off.
void lattice_curvature_op(const TorusGrid& grid, const std::vector<double>& f,
                          std::vector<double>& out) {
  std::vector<double> dthx, dthy;
  gauge_edge_shifts(grid, f, dthx, dthy);
  const int n = grid.n();
  auto at = [&](const std::vector<double>& v, int i, int j) {
    return v[size_t((i % n + n) % n) * n + ((j % n + n) % n)];
  };
  auto plaq = [&](int i, int j) {
    return at(dthx, i, j) + at(dthy, i + 1, j) - at(dthx, i, j + 1) - at(dthy, i, j);
  };
  out.resize(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out[size_t(i) * n + j] = -0.25 * double(n) * n *
                               (plaq(i, j) + plaq(i - 1, j) + plaq(i, j - 1) +
                                plaq(i - 1, j - 1));
}
}  // namespace

HolomorphicTriple complex_gauge_apply(const TorusGrid& grid,
                                      const std::vector<double>& f,
                                      const HolomorphicTriple& triple) {
  const int n = triple.n;
  if (f.size() != size_t(n) * n)
    throw std::invalid_argument("complex_gauge_apply: gauge field size mismatch");
  HolomorphicTriple out = triple;
  std::vector<double> dthx, dthy;
  gauge_edge_shifts(grid, f, dthx, dthy);
  const size_t mtot = size_t(n) * n;
  for (size_t k = 0; k < mtot; ++k) {
    out.conn.theta_x[k] += dthx[k];
    out.conn.theta_y[k] += dthy[k];
  }
  for (int c = 0; c < 2; ++c) {
    for (size_t k = 0; k < mtot; ++k) {
      if (!out.alpha[c].empty()) out.alpha[c].v[k] *= std::exp(f[k]);
      if (!out.beta[c].empty()) out.beta[c].v[k] *= std::exp(-f[k]);
    }
  }
  return out;
}

VortexState hk_solve(const TorusGrid& grid, const HolomorphicTriple& triple,
                     double tau, double tol) {
  const int n = triple.n;
  const size_t m = size_t(n) * n;
  if (tol < 4e-12) throw std::invalid_argument("hk_solve: tol must be >= 4e-12");
  const double s = double(triple.d) - tau;
  const bool balanced = std::abs(s) < 1e-12;

  if (!balanced && s < 0 && triple.alpha_zero())
    throw std::invalid_argument("case mismatch: d - tau < 0 requires alpha != 0");
  if (!balanced && s > 0 && triple.beta_zero())
    throw std::invalid_argument("case mismatch: d - tau > 0 requires beta != 0");
  if (balanced && (triple.alpha_zero() || triple.beta_zero()))
    throw std::invalid_argument("case mismatch: d - tau = 0 requires alpha != 0 and beta != 0");

  std::vector<double> asq(m, 0.0), bsq(m, 0.0), w(m);
  for (size_t k = 0; k < m; ++k) {
    if (!triple.alpha[0].empty()) asq[k] += std::norm(triple.alpha[0].v[k]);
    if (!triple.alpha[1].empty()) asq[k] += std::norm(triple.alpha[1].v[k]);
    if (!triple.beta[0].empty()) bsq[k] += std::norm(triple.beta[0].v[k]);
    if (!triple.beta[1].empty()) bsq[k] += std::norm(triple.beta[1].v[k]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w[size_t(i) * n + j] =
          site_curvature_angle(triple.conn, i, j) * double(n) * n + kTwoPi * tau;

  KWProblem prob;
  prob.n = n;
  double pregauge = 0.0;  // constant complex gauge e^C applied up front
  double flip = 1.0;      // -1 when solving the mirrored d - tau > 0 case
  if (balanced) {
    prob.case_tag = KWCase::remark;
    prob.P = asq;
    prob.Q = bsq;
    prob.w = w;
  } else if (s < 0) {
    prob.case_tag = KWCase::lemma;
    const double ia = grid.mean(asq), ib = grid.mean(bsq);
    if (ib > 0.0) pregauge = 0.25 * std::log(2.0 * ib / ia);
    prob.P = asq;
    prob.Q = bsq;
    const double e2 = std::exp(2.0 * pregauge);
    for (size_t k = 0; k < m; ++k) {
      prob.P[k] *= e2;
      prob.Q[k] /= e2;
    }
    prob.w = w;
  } else {
    // mirrored case: solve for -f with alpha and beta exchanged
    prob.case_tag = KWCase::lemma;
    flip = -1.0;
    const double ia = grid.mean(asq), ib = grid.mean(bsq);
    if (ia > 0.0) pregauge = 0.25 * std::log(2.0 * ia / ib);
    prob.P = bsq;
    prob.Q = asq;
    const double e2 = std::exp(2.0 * pregauge);
    for (size_t k = 0; k < m; ++k) {
      prob.P[k] *= e2;
      prob.Q[k] /= e2;
    }
    prob.w = w;
    for (double& x : prob.w) x = -x;
  }

  // Outer defect correction: the Kazdan-Warner solver works with the
  // spectral Laplacian, while the gauge flow shifts the lattice curvature by
  // the exact operator Lbar. Re-solving with w_eff = w + (Delta - Lbar) f
  // converges to the exact discrete vortex system in a few rounds, so the
  // final state closes to the solver tolerance with no curvature floor.
  VortexState state;
  const std::vector<double> w_base = prob.w;
  std::vector<double> lap(m), lbar(m);
  const KWSolution* warm = nullptr;
  for (int outer = 0; outer < 12; ++outer) {
    state.kw = solve_kw(grid, prob, 0.25 * tol, warm ? &warm->f : nullptr);
    warm = &state.kw;
    grid.laplacian(state.kw.f, lap);
    lattice_curvature_op(grid, state.kw.f, lbar);
    double gap = 0.0;
    for (size_t k = 0; k < m; ++k) {
      const double want = w_base[k] + lap[k] - lbar[k];
      gap = std::max(gap, std::abs(want - prob.w[k]));
      prob.w[k] = want;
    }
    if (gap <= 0.5 * tol) break;
  }
  std::vector<double> ftot(m);
  for (size_t k = 0; k < m; ++k) ftot[k] = flip * (state.kw.f[k] + pregauge);
  state.triple = complex_gauge_apply(grid, ftot, triple);
  state.tau = tau;
  double fs = 0.0;
  for (double x : ftot) fs = std::max(fs, std::abs(x));
  state.gauge_sup = fs;
  state.residuals = vortex_residual(grid, state.triple, tau);

  // measured two-grid floor: restrict the gauged state to the half grid,
  // evaluate there, divide by 2 (second order with a safety factor of 2)
  if (n >= 16) {
    const auto coarse = [&](const HolomorphicTriple& t) {
      HolomorphicTriple c;
      const int h = n / 2;
      c.n = h; c.d = t.d; c.m = t.m;
      auto shrink_conn = [&](const LatticeConnection& full, int deg) {
        LatticeConnection out(h, deg);
        for (int i = 0; i < h; ++i)
          for (int j = 0; j < h; ++j) {
            out.theta_x[size_t(i) * h + j] =
                full.angle_x(2 * i, 2 * j) + full.angle_x(2 * i + 1, 2 * j);
            out.theta_y[size_t(i) * h + j] =
                full.angle_y(2 * i, 2 * j) + full.angle_y(2 * i, 2 * j + 1);
          }
        return out;
      };
      c.conn = shrink_conn(t.conn, t.d);
      c.conn_m = shrink_conn(t.conn_m, t.m);
      auto shrink_field = [&](const TwistedField& f) {
        if (f.empty()) return TwistedField();
        TwistedField out(h, f.degree);
        for (int i = 0; i < h; ++i)
          for (int j = 0; j < h; ++j) out(i, j) = f(2 * i, 2 * j);
        return out;
      };
      for (int k = 0; k < 2; ++k) {
        c.alpha[k] = shrink_field(t.alpha[k]);
        c.beta[k] = shrink_field(t.beta[k]);
      }
      return c;
    };
    TorusGrid gh(n / 2);
    const auto rh = vortex_residual(gh, coarse(state.triple), tau);
    state.floors = {rh[0] / 2.0, rh[1] / 2.0, 0.0, rh[3] / 2.0};
  }

  // integrated degree identity 2 pi (d - tau) + |alpha'|^2 - |beta'|^2 = 0
  double na = 0.0, nb = 0.0;
  for (int c = 0; c < 2; ++c) {
    if (!state.triple.alpha[c].empty())
      for (const cd& z : state.triple.alpha[c].v) na += std::norm(z);
    if (!state.triple.beta[c].empty())
      for (const cd& z : state.triple.beta[c].v) nb += std::norm(z);
  }
  na /= double(m);
  nb /= double(m);
  state.degree_identity_defect = std::abs(kTwoPi * s + na - nb);
  if (state.degree_identity_defect > 1e-8)
    throw std::runtime_error("hk_solve: degree identity violated: defect " +
                             std::to_string(state.degree_identity_defect));
  return state;
}

}  // namespace vortexlab
