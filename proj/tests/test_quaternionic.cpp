#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "vortexlab/quaternionic.hpp"

using namespace vortexlab;

namespace {
SpinorPair random_pair(std::mt19937_64& rng, int n, bool unit = true) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cd> x(n), y(n);
  for (auto& z : x) z = cd(u(rng), u(rng));
  for (auto& z : y) z = cd(u(rng), u(rng));
  SpinorPair p(std::move(x), std::move(y));
  if (unit) p.normalize();
  return p;
}
}  // namespace

TEST_CASE("moment on the axis examples") {
  SpinorPair a({{1, 0}, {0, 0}}, {{0, 0}, {0, 0}});
  CHECK(moment(a).mu_r_im == doctest::Approx(1.0));
  CHECK(std::abs(moment(a).mu_c) == doctest::Approx(0.0));

  SpinorPair b({{1, 0}, {0, 0}}, {{0, 0}, {1, 0}});
  CHECK(moment(b).mu_r_im == doctest::Approx(0.0));
  CHECK(std::abs(moment(b).mu_c) == doctest::Approx(0.0));

  SpinorPair c({{1, 0}, {0, 0}}, {{1, 0}, {0, 0}});
  CHECK(moment(c).mu_r_im == doctest::Approx(0.0));
  CHECK(moment(c).mu_c.real() == doctest::Approx(1.0));
  CHECK(moment(c).mu_c.imag() == doctest::Approx(0.0));
}

TEST_CASE("moment invariance under the unit-scalar gauge action") {
  auto rng = test_rng();
  for (int rep = 0; rep < 200; ++rep) {
    const SpinorPair p = random_pair(rng, 3, false);
    std::uniform_real_distribution<double> a(0.0, 2 * std::numbers::pi);
    const cd u = std::polar(1.0, a(rng));
    SpinorPair q = p;
    for (auto& z : q.x) z *= u;
    for (auto& z : q.y) z *= std::conj(u);
    const MomentValue mp = moment(p), mq = moment(q);
    CHECK(mp.mu_r_im == doctest::Approx(mq.mu_r_im).epsilon(1e-13));
    CHECK(std::abs(mp.mu_c - mq.mu_c) < 1e-13);
  }
}

TEST_CASE("moment_polarized: diagonal, linearity, polarization identity") {
  auto rng = test_rng();
  for (int rep = 0; rep < 100; ++rep) {
    const SpinorPair p = random_pair(rng, 2, false);
    const SpinorPair q = random_pair(rng, 2, false);
    const MomentValue diag = moment_polarized(p, p), mm = moment(p);
    CHECK(diag.mu_r_im == doctest::Approx(mm.mu_r_im).epsilon(1e-13));
    CHECK(std::abs(diag.mu_c - mm.mu_c) < 1e-13);

    SpinorPair zero({{0, 0}, {0, 0}}, {{0, 0}, {0, 0}});
    const MomentValue z = moment_polarized(p, zero);
    CHECK(z.mu_r_im == doctest::Approx(0.0));
    CHECK(std::abs(z.mu_c) == doctest::Approx(0.0));

    // 4 mu(p, q) = mu(p + q) - mu(p - q), the independent oracle
    SpinorPair sum = p, dif = p;
    for (size_t k = 0; k < p.x.size(); ++k) {
      sum.x[k] += q.x[k];
      sum.y[k] += q.y[k];
      dif.x[k] -= q.x[k];
      dif.y[k] -= q.y[k];
    }
    const MomentValue pol = moment_polarized(p, q);
    const MomentValue o1 = moment(sum), o2 = moment(dif);
    CHECK(pol.mu_r_im == doctest::Approx(0.25 * (o1.mu_r_im - o2.mu_r_im)).epsilon(1e-12));
    CHECK(std::abs(pol.mu_c - 0.25 * (o1.mu_c - o2.mu_c)) < 1e-12);
  }
  SpinorPair p2 = random_pair(rng, 2), p3 = random_pair(rng, 3);
  CHECK_THROWS(moment_polarized(p2, p3));
}

TEST_CASE("moment identity: zero on y = 0, hand value on the aligned pair") {
  SpinorPair a({{1, 0}, {0.3, -0.4}}, {{0, 0}, {0, 0}});
  CHECK(moment_identity_check(a) < 1e-15);
  // x = e1, y = e1: both sides equal 1, deviation 0
  SpinorPair c({{1, 0}, {0, 0}}, {{1, 0}, {0, 0}});
  CHECK(moment_identity_check(c) < 1e-15);
  CHECK(std::norm(moment(c).mu_c) == doctest::Approx(1.0));
}

TEST_CASE("moment identity property sweep: 1000 unit pairs under 1e-12") {
  auto rng = test_rng();
  double worst = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const SpinorPair p = random_pair(rng, 2 + rep % 3);
    worst = std::max(worst, moment_identity_check(p));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("find_positive_pairing on the lemma examples") {
  // v = w = e1 (x) e1 at n = 2: scan of the 9 basis elements succeeds
  std::vector<cd> v(4, cd(0, 0)), w(4, cd(0, 0));
  v[0] = 1.0;
  w[0] = 1.0;
  const PairingElement b = find_positive_pairing(v, w);
  const auto bv = b.apply(v);
  cd acc{0, 0};
  for (size_t k = 0; k < bv.size(); ++k) acc += std::conj(w[k]) * bv[k];
  CHECK(acc.real() > 0.0);

  // v = e1 (x) e1, w = e2 (x) e2
  std::vector<cd> w2(4, cd(0, 0));
  w2[3] = 1.0;
  const PairingElement b2 = find_positive_pairing(v, w2);
  const auto bv2 = b2.apply(v);
  cd acc2{0, 0};
  for (size_t k = 0; k < bv2.size(); ++k) acc2 += std::conj(w2[k]) * bv2[k];
  CHECK(acc2.real() > 0.0);

  CHECK_THROWS(find_positive_pairing(std::vector<cd>(4, cd(0, 0)), w2));
}

TEST_CASE("find_positive_pairing never fails on random nonzero pairs") {
  auto rng = test_rng();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n : {2, 3}) {
    for (int rep = 0; rep < 20000; ++rep) {
      std::vector<cd> v(2 * n), w(2 * n);
      for (auto& z : v) z = cd(u(rng), u(rng));
      for (auto& z : w) z = cd(u(rng), u(rng));
      const PairingElement b = find_positive_pairing(v, w);
      const auto bv = b.apply(v);
      cd acc{0, 0};
      for (size_t k = 0; k < bv.size(); ++k) acc += std::conj(w[k]) * bv[k];
      CHECK(acc.real() > 0.0);
    }
  }
}
