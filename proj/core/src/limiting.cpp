#include "vortexlab/limiting.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>

namespace vortexlab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double torus_dist(double ax, double ay, double bx, double by) {
  double dx = std::abs(ax - bx), dy = std::abs(ay - by);
  dx = std::min(dx, 1.0 - dx);
  dy = std::min(dy, 1.0 - dy);
  return std::hypot(dx, dy);
}

// Winding of the field around the lattice square loop of half-width `rad`
// cells centered at (ci, cj), using the wrap-aware accessor. Throws when a
// loop value is too small or a phase step is ambiguous.
int winding(const TwistedField& f, int ci, int cj, int rad) {
  std::vector<std::pair<int, int>> loop;
  for (int s = -rad; s < rad; ++s) loop.push_back({ci + s, cj - rad});
  for (int s = -rad; s < rad; ++s) loop.push_back({ci + rad, cj + s});
  for (int s = rad; s > -rad; --s) loop.push_back({ci + s, cj + rad});
  for (int s = rad; s > -rad; --s) loop.push_back({ci - rad, cj + s});
  loop.push_back(loop.front());
  double total = 0.0;
  double minmod = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k + 1 < loop.size(); ++k) {
    const cd a = f.at(loop[k].first, loop[k].second);
    const cd b = f.at(loop[k + 1].first, loop[k + 1].second);
    minmod = std::min({minmod, std::abs(a), std::abs(b)});
    if (std::abs(a) == 0.0 || std::abs(b) == 0.0)
      throw std::runtime_error("zero on mask boundary");
    const double step = std::arg(b / a);
    if (std::abs(step) > 0.9 * std::numbers::pi)
      throw std::runtime_error("zero on mask boundary");
    total += step;
  }
  const double wr = total / kTwoPi;
  const int w = int(std::lround(wr));
  if (std::abs(wr - w) > 0.2) throw std::runtime_error("zero on mask boundary");
  return w;
}

// Locates the zeros of a component field by modulus argmin scanning: every
// site that is a strict local minimum below `level` times the field sup.
std::vector<std::pair<int, int>> locate_zeros(const TwistedField& f, int expected) {
  const int n = f.n;
  std::vector<std::pair<int, int>> out;
  std::vector<std::pair<double, std::pair<int, int>>> cand;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double v = std::abs(f(i, j));
      bool ismin = true;
      for (int di = -1; di <= 1 && ismin; ++di)
        for (int dj = -1; dj <= 1 && ismin; ++dj)
          if (di || dj)
            if (std::abs(f.at(i + di, j + dj)) < v) ismin = false;
      if (ismin) cand.push_back({v, {i, j}});
    }
  std::sort(cand.begin(), cand.end());
  for (int k = 0; k < expected && k < int(cand.size()); ++k) out.push_back(cand[k].second);
  return out;
}
}  // namespace

LimitingState simple_gauge(const TorusGrid& grid, const HolomorphicTriple& triple,
                           double mask_radius) {
  const int n = triple.n;
  if (grid.n() != n) throw std::invalid_argument("simple_gauge: grid mismatch");
  if (triple.alpha_zero() || triple.beta_zero())
    throw std::invalid_argument("simple_gauge: alpha and beta must both be nonzero");

  LimitingState st;
  st.mask_radius = mask_radius;

  // zero bookkeeping per active component
  std::vector<LimitingZero> zeros;
  const int rad = std::max(2, int(std::ceil(mask_radius * n)));
  for (int side = 0; side < 2; ++side)
    for (int c = 0; c < 2; ++c) {
      const TwistedField& f = side == 0 ? triple.alpha[c] : triple.beta[c];
      if (f.empty() || f.is_zero()) continue;
      if (f.degree <= 0) continue;  // positive-degree sections carry the zeros
      for (auto [i, j] : locate_zeros(f, f.degree)) {
        LimitingZero z;
        z.x = double(i) / n;
        z.y = double(j) / n;
        z.from_alpha = (side == 0);
        const int w = winding(f, i, j, rad);
        z.q = (side == 0) ? w : -w;
        zeros.push_back(z);
      }
    }
  for (size_t a = 0; a < zeros.size(); ++a)
    for (size_t b = a + 1; b < zeros.size(); ++b)
      if (torus_dist(zeros[a].x, zeros[a].y, zeros[b].x, zeros[b].y) <= 3.0 * mask_radius)
        throw std::invalid_argument("zeros too close");

  int qsum = 0;
  for (const auto& z : zeros) qsum += z.q;
  if (qsum != 2 * triple.d)
    throw std::runtime_error("simple_gauge: weights do not sum to 2d");
  st.zeros = std::move(zeros);

  // h = sqrt(|beta| / |alpha|) outside the mask disks
  st.h.assign(size_t(n) * n, 0.0);
  st.mask.assign(size_t(n) * n, 0);
  st.alpha = triple.alpha;
  st.beta = triple.beta;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const size_t k = size_t(i) * n + j;
      const double x = double(i) / n, y = double(j) / n;
      bool masked = false;
      for (const auto& z : st.zeros)
        if (torus_dist(x, y, z.x, z.y) <= mask_radius) masked = true;
      if (masked) {
        st.mask[k] = 1;
        for (int c = 0; c < 2; ++c) {
          if (!st.alpha[c].empty()) st.alpha[c].v[k] = 0.0;
          if (!st.beta[c].empty()) st.beta[c].v[k] = 0.0;
        }
        continue;
      }
      const double am = std::sqrt(std::norm(triple.alpha[0].v[k]) + std::norm(triple.alpha[1].v[k]));
      const double bm = std::sqrt(std::norm(triple.beta[0].v[k]) + std::norm(triple.beta[1].v[k]));
      const double h = std::sqrt(bm / am);
      st.h[k] = h;
      for (int c = 0; c < 2; ++c) {
        if (!st.alpha[c].empty()) st.alpha[c].v[k] *= h;
        if (!st.beta[c].empty()) st.beta[c].v[k] /= h;
      }
    }
  return st;
}

double vanishing_exponent(const TorusGrid& grid, const std::vector<double>& modulus,
                          std::array<double, 2> zero_point,
                          const std::vector<double>& radii) {
  const int n = grid.n();
  if (modulus.size() != size_t(n) * n)
    throw std::invalid_argument("vanishing_exponent: modulus size mismatch");
  if (radii.size() < 4) throw std::invalid_argument("insufficient resolution: need >= 4 radii");
  for (double r : radii)
    if (r <= 2.0 * grid.spacing() || r >= 0.5)
      throw std::invalid_argument("insufficient resolution: radii must lie in (2h, 1/2)");

  auto sample = [&](double x, double y) {
    x -= std::floor(x);
    y -= std::floor(y);
    const double gx = x * n, gy = y * n;
    const int i0 = int(gx) % n, j0 = int(gy) % n;
    const double fx = gx - std::floor(gx), fy = gy - std::floor(gy);
    const int i1 = (i0 + 1) % n, j1 = (j0 + 1) % n;
    return modulus[size_t(i0) * n + j0] * (1 - fx) * (1 - fy) +
           modulus[size_t(i1) * n + j0] * fx * (1 - fy) +
           modulus[size_t(i0) * n + j1] * (1 - fx) * fy +
           modulus[size_t(i1) * n + j1] * fx * fy;
  };

  // geometric mean over angles, then least-squares slope in log-log
  std::vector<double> lr, lv;
  constexpr int kAngles = 32;
  for (double r : radii) {
    double acc = 0.0;
    for (int a = 0; a < kAngles; ++a) {
      const double th = kTwoPi * a / kAngles;
      const double v = sample(zero_point[0] + r * std::cos(th),
                              zero_point[1] + r * std::sin(th));
      if (v <= 0.0) throw std::invalid_argument("insufficient resolution: zero sample on circle");
      acc += std::log(v);
    }
    lr.push_back(std::log(r));
    lv.push_back(acc / kAngles);
  }
  double mx = 0, my = 0;
  for (size_t k = 0; k < lr.size(); ++k) mx += lr[k], my += lv[k];
  mx /= lr.size();
  my /= lv.size();
  double num = 0, den = 0;
  for (size_t k = 0; k < lr.size(); ++k) {
    num += (lr[k] - mx) * (lv[k] - my);
    den += (lr[k] - mx) * (lr[k] - mx);
  }
  return num / den;
}

std::vector<SweepRecord> t_sweep(const TorusGrid& grid, const HolomorphicTriple& triple,
                                 std::vector<double> t_list, double tau,
                                 double ball_radius, int jobs) {
  if (triple.alpha_zero() || triple.beta_zero())
    throw std::invalid_argument("t_sweep: alpha and beta must both be nonzero");
  std::sort(t_list.begin(), t_list.end(), std::greater<double>());

  // reference zeros and weights from the simple gauge of the input triple
  const LimitingState ref = simple_gauge(grid, triple, 3.0 * grid.spacing());
  const int n = triple.n;
  const size_t m = size_t(n) * n;

  auto run_one = [&](double t) {
    SweepRecord rec;
    rec.t = t;
    HolomorphicTriple scaled = triple;
    const double inv = 1.0 / t;
    for (int c = 0; c < 2; ++c) {
      if (!scaled.alpha[c].empty()) scaled.alpha[c].scale(inv);
      if (!scaled.beta[c].empty()) scaled.beta[c].scale(inv);
    }
    VortexState vs = hk_solve(grid, scaled, tau, 1e-9);
    rec.f_t = vs.kw;
    rec.kw_iters = vs.kw.newton_iters;
    rec.residual = vs.kw.residual_linf;
    rec.zeros = ref.zeros;
    for (const auto& z : ref.zeros) {
      // int_{B(x,r)} i * F_{A'} = -(sum of plaquette angles in the ball),
      // plaquettes taken by their centers
      double fluxball = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const double cx = (i + 0.5) / n, cy = (j + 0.5) / n;
          if (torus_dist(cx, cy, z.x, z.y) < ball_radius)
            fluxball -= vs.triple.conn.plaquette_angle(i, j);
        }
      rec.per_zero_flux.push_back(fluxball);
    }
    // the defect of the t-representative (A', Psi', t): the solve runs on
    // the 1/t-scaled sections, so scale back by t here
    double l2 = 0.0;
    for (size_t k = 0; k < m; ++k) {
      const double am = std::sqrt(std::norm(vs.triple.alpha[0].v[k]) +
                                  std::norm(vs.triple.alpha[1].v[k]));
      const double bm = std::sqrt(std::norm(vs.triple.beta[0].v[k]) +
                                  std::norm(vs.triple.beta[1].v[k]));
      l2 += (am - bm) * (am - bm);
    }
    rec.global_l2_alpha_minus_beta = t * std::sqrt(l2 / double(m));
    return rec;
  };

  std::vector<SweepRecord> records(t_list.size());
  if (jobs <= 1) {
    for (size_t k = 0; k < t_list.size(); ++k) records[k] = run_one(t_list[k]);
  } else {
    std::vector<std::future<SweepRecord>> futs;
    for (double t : t_list)
      futs.push_back(std::async(std::launch::async, run_one, t));
    for (size_t k = 0; k < futs.size(); ++k) records[k] = futs[k].get();
  }
  return records;
}

}  // namespace vortexlab
