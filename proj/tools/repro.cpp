#include "repro.hpp"

#include <chrono>
#include <cstdlib>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "vortexlab/census.hpp"
#include "vortexlab/dolbeault.hpp"
#include "vortexlab/io.hpp"
#include "vortexlab/kazdan_warner.hpp"
#include "vortexlab/limiting.hpp"
#include "vortexlab/quaternionic.hpp"
#include "vortexlab/theta.hpp"
#include "vortexlab/vortex.hpp"

namespace vortexlab::repro {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::mt19937_64 seeded_rng() {
  const char* env = std::getenv("VORTEXLAB_SEED");
  return std::mt19937_64(env ? std::strtoull(env, nullptr, 10) : 0x5eed5eedull);
}

HolomorphicTriple demo_triple(const TorusGrid& g) {
  std::array<std::vector<std::array<double, 2>>, 2> az, bz;
  az[0] = {{0.25, 0.25}};
  bz[1] = {{0.75, 0.75}};
  return theta_triple(g, 1, 0, az, bz, 2.5);
}

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "; FAILED " << what;
    }
  }
};

// 1. census table reproduces the five classification rows, byte-exact
CriterionResult c_census_table() {
  CriterionResult r{"census-table", false, "", 0};
  Check c;
  const std::string csv = census_table_csv();
  c.expect(csv == golden_census_csv(), "census CSV differs from the golden copy");
  long sw_g1 = -1, sw_g2 = -1;
  bool empties_zero = true, bundles_zero = true;
  for (const auto& row : census_table()) {
    if (row.item == "1-empty") empties_zero &= (row.desc.sw.value == 0);
    if (row.item == "3-projbundle") bundles_zero &= (row.desc.sw.value == 0);
    if (row.item == "4-twopoints") sw_g1 = row.desc.sw.value;
    if (row.item == "5-genus5curve") sw_g2 = row.desc.sw.value;
  }
  c.expect(empties_zero, "empty rows must carry SW = 0");
  c.expect(bundles_zero, "projective-bundle rows must carry SW = 0");
  c.expect(sw_g1 == 2, "SW(g=1, d=0) = 2");
  c.expect(sw_g2 == 8, "SW(g=2, d=0) = 8");
  r.pass = c.ok;
  r.details = "five rows exact" + c.detail.str();
  return r;
}

// 2. sw = (-1)^{g-1} chi and the involution over g in {1,2}, |d| <= 4
CriterionResult c_sign_involution() {
  CriterionResult r{"sign-involution", false, "", 0};
  Check c;
  for (int g = 1; g <= 2; ++g)
    for (int d = -4; d <= 4; ++d) {
      BundleSpec s;
      s.genus = g;
      s.kind = g == 2 ? BundleKind::stable_generic : BundleKind::split;
      s.param = 0;
      s.cls = ClassFlag::generic;
      s.d = d;
      s.sign_of_d_minus_tau = -1;
      const auto m = classify(s);
      if (m.sw.defined)
        c.expect(m.sw.value == (g % 2 == 1 ? 1 : -1) * m.euler, "sign law at g=" +
                 std::to_string(g) + " d=" + std::to_string(d));
      c.expect(involution_check(s), "involution at g=" + std::to_string(g) +
               " d=" + std::to_string(d));
    }
  r.pass = c.ok;
  r.details = "grid g in {1,2}, |d| <= 4" + c.detail.str();
  return r;
}

// 3. Kazdan-Warner manufactured solution at n = 64
CriterionResult c_kw_manufactured() {
  CriterionResult r{"kw-manufactured", false, "", 0};
  Check c;
  TorusGrid g(64);
  const int n = 64;
  KWProblem prob;
  prob.n = n;
  prob.case_tag = KWCase::lemma;
  std::vector<double> fstar(g.sites());
  prob.P.resize(g.sites());
  prob.Q.assign(g.sites(), 0.5);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double x = double(i) / n, y = double(j) / n;
      fstar[size_t(i) * n + j] = 0.3 * std::cos(kTwoPi * x) * std::cos(kTwoPi * y);
      prob.P[size_t(i) * n + j] = 1.0 + 0.5 * std::sin(kTwoPi * x);
    }
  std::vector<double> lap;
  g.laplacian(fstar, lap);
  prob.w.resize(g.sites());
  for (int k = 0; k < g.sites(); ++k)
    prob.w[k] = lap[k] + prob.P[k] * std::exp(2 * fstar[k]) -
                prob.Q[k] * std::exp(-2 * fstar[k]);

  const KWSolution a = solve_kw(g, prob, 1e-11);
  double err = 0.0;
  for (int k = 0; k < g.sites(); ++k) err = std::max(err, std::abs(a.f[k] - fstar[k]));
  c.expect(err <= 1e-9, "|f - f*|_inf <= 1e-9 (got " + format_double(err) + ")");
  c.expect(a.newton_iters <= 15, "<= 15 Newton iterations");

  std::vector<double> guess = fstar;
  for (double& x : guess) x += 1.0;
  const KWSolution b = solve_kw(g, prob, 1e-11, &guess);
  double diff = 0.0;
  for (int k = 0; k < g.sites(); ++k) diff = std::max(diff, std::abs(a.f[k] - b.f[k]));
  c.expect(diff <= 1e-9, "two-start agreement <= 1e-9");
  r.pass = c.ok;
  r.details = "err " + format_double(err) + ", iters " + std::to_string(a.newton_iters) +
              ", two-start " + format_double(diff) + c.detail.str();
  return r;
}

// 4. flux quantization across constructed and gauge-transformed connections
CriterionResult c_flux_quantization() {
  CriterionResult r{"flux-quantization", false, "", 0};
  Check c;
  double worst = 0.0;
  TorusGrid g(32);
  auto consider = [&](const LatticeConnection& conn, int want) {
    worst = std::max(worst, flux_deviation(conn));
    c.expect(flux(conn) == want, "integer flux");
  };
  for (int d = -3; d <= 3; ++d) consider(base_connection(g, d), d);
  for (int d = -2; d <= 2; ++d) consider(base_connection_with_class(g, d, {0.37, 0.81}), d);
  auto [tf1, tc1] = theta_section(g, ThetaSpec{1, {{0.5, 0.5}}, 8});
  consider(tc1, 1);
  auto [tf2, tc2] = theta_section(g, ThetaSpec{2, {{0.25, 0.25}, {0.75, 0.75}}, 8});
  consider(tc2, 2);
  // unitary gauge transform
  auto rng = seeded_rng();
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  std::vector<double> phi(g.sites());
  for (auto& p : phi) p = u(rng);
  consider(unitary_gauge(tc2, phi), 2);
  // complex gauge flow through the Hitchin-Kobayashi step
  const auto t = demo_triple(g);
  const VortexState vs = hk_solve(g, t, 0.0, 1e-9);
  consider(vs.triple.conn, 0);
  c.expect(worst < 1e-10, "flux deviation < 1e-10");
  r.pass = c.ok;
  r.details = "worst deviation " + format_double(worst) + c.detail.str();
  return r;
}

// 5. Riemann-Roch / h0 table at n = 32
CriterionResult c_h0_table() {
  CriterionResult r{"h0-table", false, "", 0};
  Check c;
  TorusGrid g(32);
  const std::array<double, 2> generic{0.31, 0.77};
  for (int d = -2; d <= 3; ++d) {
    DolbeaultProblem p(g, {base_connection_with_class(g, d, generic)});
    const auto rep = h0(p);
    c.expect(rep.h0 == std::max(d, 0), "h0(d=" + std::to_string(d) + ") = max(d,0)");
    c.expect(rep.h0 - rep.h1 == d, "index h0 - h1 = d at d=" + std::to_string(d));
  }
  DolbeaultProblem pt(g, {base_connection_with_class(g, 0, {0.0, 0.0})});
  const auto rt = h0(pt);
  c.expect(rt.h0 == 1 && rt.h1 == 1, "degree-0 trivial class h0 = 1, index 0");
  DolbeaultProblem pn(g, {base_connection_with_class(g, 0, {0.5, 0.25})});
  const auto rn = h0(pn);
  c.expect(rn.h0 == 0 && rn.h1 == 0, "degree-0 nontrivial class h0 = 0");
  r.pass = c.ok;
  r.details = "degrees -2..3 generic plus the degree-0 split" + c.detail.str();
  return r;
}

// 6. Hitchin-Kobayashi on the m=1, d=0, tau=0 theta triple at n = 128
CriterionResult c_hk_theta() {
  CriterionResult r{"hk-theta", false, "", 0};
  Check c;
  TorusGrid g(128);
  const auto t = demo_triple(g);
  const VortexState s = hk_solve(g, t, 0.0, 1e-9);
  for (int k = 0; k < 4; ++k)
    c.expect(s.residuals[k] <= 1e-6 + s.floors[k],
             "residual " + std::to_string(k) + " <= 1e-6 + floor (got " +
                 format_double(s.residuals[k]) + " floor " + format_double(s.floors[k]) + ")");
  c.expect(s.degree_identity_defect <= 1e-8, "degree identity <= 1e-8");
  r.pass = c.ok;
  r.details = "residuals (" + format_double(s.residuals[0]) + ", " +
              format_double(s.residuals[1]) + ", " + format_double(s.residuals[2]) + ", " +
              format_double(s.residuals[3]) + "), identity defect " +
              format_double(s.degree_identity_defect) + c.detail.str();
  return r;
}

// 7. limiting sweep at n = 128, t down to 1/16
CriterionResult c_limit_sweep() {
  CriterionResult r{"limit-sweep", false, "", 0};
  Check c;
  TorusGrid g(128);
  const auto t = demo_triple(g);
  const auto recs = t_sweep(g, t, {1.0, 0.5, 0.25, 0.125, 0.0625}, 0.0, 0.1);
  const auto& last = recs.back();
  int qsum = 0;
  double worst_rel = 0.0;
  for (size_t z = 0; z < last.zeros.size(); ++z) {
    qsum += last.zeros[z].q;
    const double want = std::numbers::pi * last.zeros[z].q;
    worst_rel = std::max(worst_rel,
                         std::abs(last.per_zero_flux[z] - want) / std::abs(want));
  }
  c.expect(worst_rel <= 0.10, "ball flux within 10% of pi q at t = 1/16 (got " +
                                  format_double(worst_rel) + ")");
  c.expect(qsum == 2 * t.d, "sum of q equals 2d exactly");
  // vanishing exponents of |Psi'| at every simple zero
  std::vector<double> mod(g.sites());
  for (int k = 0; k < g.sites(); ++k) {
    const double am = std::sqrt(std::norm(t.alpha[0].v[k]) + std::norm(t.alpha[1].v[k]));
    const double bm = std::sqrt(std::norm(t.beta[0].v[k]) + std::norm(t.beta[1].v[k]));
    mod[k] = std::sqrt(2.0 * am * bm);
  }
  const std::vector<double> radii{0.03, 0.04, 0.05, 0.06, 0.08};
  for (const auto& z : last.zeros) {
    const double e = vanishing_exponent(g, mod, {z.x, z.y}, radii);
    c.expect(std::abs(e - 0.5) <= 0.05,
             "vanishing exponent 0.5 +- 0.05 (got " + format_double(e) + ")");
  }
  r.pass = c.ok;
  r.details = "smallest t flux rel err " + format_double(worst_rel) + c.detail.str();
  return r;
}

// 8. moment identities on 1e5 random spinor pairs
CriterionResult c_moment_identities() {
  CriterionResult r{"moment-identities", false, "", 0};
  Check c;
  auto rng = seeded_rng();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst_id = 0.0, worst_pol = 0.0;
  int pair_fail = 0;
  for (int rep = 0; rep < 100000; ++rep) {
    const int n = 2 + rep % 2;
    std::vector<cd> x(n), y(n);
    for (auto& z : x) z = cd(u(rng), u(rng));
    for (auto& z : y) z = cd(u(rng), u(rng));
    SpinorPair p(x, y);
    p.normalize();
    worst_id = std::max(worst_id, moment_identity_check(p));
    // polarization identity against the quarter-difference oracle
    std::vector<cd> x2(n), y2(n);
    for (auto& z : x2) z = cd(u(rng), u(rng));
    for (auto& z : y2) z = cd(u(rng), u(rng));
    SpinorPair q(x2, y2);
    q.normalize();
    SpinorPair sum = p, dif = p;
    for (int k = 0; k < n; ++k) {
      sum.x[k] += q.x[k];
      sum.y[k] += q.y[k];
      dif.x[k] -= q.x[k];
      dif.y[k] -= q.y[k];
    }
    const MomentValue pol = moment_polarized(p, q);
    const MomentValue o1 = moment(sum), o2 = moment(dif);
    worst_pol = std::max(worst_pol,
                         std::abs(pol.mu_r_im - 0.25 * (o1.mu_r_im - o2.mu_r_im)));
    worst_pol = std::max(worst_pol, std::abs(pol.mu_c - 0.25 * (o1.mu_c - o2.mu_c)));
    // transversality pairing always succeeds
    try {
      std::vector<cd> v(2 * n), w(2 * n);
      for (auto& z : v) z = cd(u(rng), u(rng));
      for (auto& z : w) z = cd(u(rng), u(rng));
      const PairingElement b = find_positive_pairing(v, w);
      const auto bv = b.apply(v);
      cd acc{0, 0};
      for (size_t k = 0; k < bv.size(); ++k) acc += std::conj(w[k]) * bv[k];
      if (!(acc.real() > 0.0)) ++pair_fail;
    } catch (...) {
      ++pair_fail;
    }
  }
  c.expect(worst_id <= 1e-12, "moment identity <= 1e-12");
  c.expect(worst_pol <= 1e-12, "polarization identity <= 1e-12");
  c.expect(pair_fail == 0, "find_positive_pairing success rate 100%");
  r.pass = c.ok;
  r.details = "identity " + format_double(worst_id) + ", polarization " +
              format_double(worst_pol) + ", pairing failures " +
              std::to_string(pair_fail) + c.detail.str();
  return r;
}

// 9. Fueter complex index vanishes for k = 0..10 at genus 1
CriterionResult c_fueter_index() {
  CriterionResult r{"fueter-index", false, "", 0};
  Check c;
  for (int k = 0; k <= 10; ++k)
    c.expect(fueter_complex_index(1, k) == 0, "index zero at k=" + std::to_string(k));
  r.pass = c.ok;
  r.details = "k = 0..10 exact" + c.detail.str();
  return r;
}

struct Entry {
  const char* name;
  CriterionResult (*fn)();
  double budget_s;
};
const Entry kEntries[] = {
    {"census-table", c_census_table, 1.0},
    {"sign-involution", c_sign_involution, 1.0},
    {"kw-manufactured", c_kw_manufactured, 10.0},
    {"flux-quantization", c_flux_quantization, 60.0},
    {"h0-table", c_h0_table, 60.0},
    {"hk-theta", c_hk_theta, 120.0},
    {"limit-sweep", c_limit_sweep, 600.0},
    {"moment-identities", c_moment_identities, 10.0},
    {"fueter-index", c_fueter_index, 1.0},
};
}  // namespace

std::vector<std::string> criterion_names() {
  std::vector<std::string> out;
  for (const auto& e : kEntries) out.push_back(e.name);
  return out;
}

std::vector<CriterionResult> run(const std::string& name) {
  std::vector<CriterionResult> results;
  for (const auto& e : kEntries) {
    if (name != "all" && name != e.name) continue;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = e.fn();
    } catch (const std::exception& ex) {
      r.name = e.name;
      r.pass = false;
      r.details = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > e.budget_s) {
      r.pass = false;
      r.details += "; over time budget " + format_double(e.budget_s) + "s";
    }
    results.push_back(std::move(r));
  }
  return results;
}

int report(const std::vector<CriterionResult>& results) {
  bool all = !results.empty();
  for (const auto& r : results) {
    std::printf("%s  %-18s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.seconds, r.details.c_str());
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace vortexlab::repro
