#include "doctest.h"
#include "vortexlab/census.hpp"
#include "vortexlab/dolbeault.hpp"

using namespace vortexlab;

namespace {
BundleSpec mk(int genus, BundleKind kind, int param, ClassFlag cls, int d, int sign = -1) {
  BundleSpec s;
  s.genus = genus;
  s.kind = kind;
  s.param = param;
  s.cls = cls;
  s.d = d;
  s.sign_of_d_minus_tau = sign;
  return s;
}
}  // namespace

TEST_CASE("genus 0 classification") {
  SUBCASE("k = 0, d = 1: CP^1 with undefined sw") {
    const auto m = classify(mk(0, BundleKind::split, 0, ClassFlag::generic, 1));
    CHECK(m.status == StatusKind::projective_space);
    CHECK(m.proj_dim == 1);
    CHECK(m.euler == 2);
    CHECK(m.compact);
    CHECK_FALSE(m.sw.defined);
    CHECK(m.sw.reason == "undefined(b1=1 wall-crossing)");
  }
  SUBCASE("k = 0, d <= 0 empty") {
    CHECK(classify(mk(0, BundleKind::split, 0, ClassFlag::generic, 0)).status ==
          StatusKind::empty);
    CHECK(classify(mk(0, BundleKind::split, 0, ClassFlag::generic, -2)).status ==
          StatusKind::empty);
  }
  SUBCASE("k = 3, d = 1: noncompact with compactified euler 12") {
    const auto m = classify(mk(0, BundleKind::split, 3, ClassFlag::generic, 1));
    CHECK(m.status == StatusKind::noncompact_fibration);
    CHECK_FALSE(m.compact);
    CHECK(m.fueter_present);
    CHECK(m.euler == 12);
    // independent oracle: cell count of the CP^{k-d} fibration over CP^{k+d-1}
    long cells = 0;
    for (int bc = 0; bc < 3 + 1; ++bc)       // cells of CP^{k+d-1}, k+d = 4
      for (int fc = 0; fc < 2 + 1; ++fc)     // cells of CP^{k-d}, k-d = 2
        ++cells;
    CHECK(m.euler == cells);
  }
}

TEST_CASE("genus 1 classification (rederived) matches the transcribed table") {
  // hard-coded generic-table: d < 0 empty; d = 0 two points SW 2; d > 0
  // projective bundle over J^d with SW 0
  for (int d = -4; d <= 4; ++d) {
    const auto m = classify(mk(1, BundleKind::split, 0, ClassFlag::generic, d));
    if (d < 0) {
      CHECK(m.status == StatusKind::empty);
      CHECK(m.sw.value == 0);
    } else if (d == 0) {
      CHECK(m.status == StatusKind::points);
      CHECK(m.point_count == 2);
      CHECK(m.euler == 2);
      CHECK(m.sw.value == 2);
      CHECK(m.dimC == 0);
    } else {
      CHECK(m.status == StatusKind::projective_bundle);
      CHECK(m.proj_dim == 2 * d - 1);
      CHECK(m.euler == 0);
      CHECK(m.sw.value == 0);
      CHECK(m.dimC == 2 * d);  // g - 1 + 2d
    }
  }
}

TEST_CASE("genus 1 non-generic split and Atiyah bundle") {
  SUBCASE("two-torsion class at d = 0: noncompact with Fueter data") {
    const auto m = classify(mk(1, BundleKind::split, 0, ClassFlag::two_torsion, 0));
    CHECK(m.status == StatusKind::noncompact_fibration);
    CHECK_FALSE(m.compact);
    CHECK(m.fueter_present);
    CHECK(m.provenance == "computed");
  }
  SUBCASE("trivial class matches two-torsion shape") {
    const auto m = classify(mk(1, BundleKind::split, 0, ClassFlag::trivial, 0));
    CHECK(m.status == StatusKind::noncompact_fibration);
    CHECK(m.fueter_present);
  }
  SUBCASE("atiyah E0 at d = 0: affine line with CP1 compactification") {
    const auto m = classify(mk(1, BundleKind::atiyah_e0, 0, ClassFlag::generic, 0));
    CHECK(m.status == StatusKind::affine_line_with_cp1_compactification);
    CHECK_FALSE(m.compact);
    CHECK(m.fueter_present);
    CHECK(m.euler == 2);
  }
  SUBCASE("atiyah E0 away from d = 0") {
    CHECK(classify(mk(1, BundleKind::atiyah_e0, 0, ClassFlag::generic, -1)).status ==
          StatusKind::empty);
    CHECK(classify(mk(1, BundleKind::atiyah_e0, 0, ClassFlag::generic, 2)).status ==
          StatusKind::projective_bundle);
  }
  SUBCASE("m = 1 splits: d = 0 noncompact, d > m projective bundle") {
    const auto a = classify(mk(1, BundleKind::split, 1, ClassFlag::generic, 0));
    CHECK(a.status == StatusKind::noncompact_fibration);
    CHECK(a.fueter_present);
    const auto b = classify(mk(1, BundleKind::split, 1, ClassFlag::generic, 2));
    CHECK(b.status == StatusKind::projective_bundle);
    const auto c = classify(mk(1, BundleKind::split, 1, ClassFlag::generic, 1));
    CHECK(c.status == StatusKind::unclassified);
  }
}

TEST_CASE("genus 2 classification") {
  const auto m0 = classify(mk(2, BundleKind::stable_generic, 0, ClassFlag::generic, 0));
  CHECK(m0.status == StatusKind::curve);
  CHECK(m0.curve_genus == 5);
  CHECK(m0.euler == -8);
  CHECK(m0.sw.value == 8);
  CHECK(m0.dimC == 1);
  CHECK(m0.provenance == "paper-transcribed");

  const auto m1 = classify(mk(2, BundleKind::stable_generic, 0, ClassFlag::generic, 1));
  CHECK(m1.status == StatusKind::projective_bundle);
  CHECK(m1.euler == 0);
  CHECK(m1.dimC == 3);  // g - 1 + 2d

  CHECK(classify(mk(2, BundleKind::stable_generic, 0, ClassFlag::generic, -1)).status ==
        StatusKind::empty);
}

TEST_CASE("dimension law dimC = genus - 1 + 2d on compact nonempty spaces") {
  for (int g = 0; g <= 2; ++g)
    for (int d = -4; d <= 4; ++d) {
      BundleSpec s = mk(g, g == 2 ? BundleKind::stable_generic : BundleKind::split, 0,
                        ClassFlag::generic, d);
      const auto m = classify(s);
      if (m.compact && m.status != StatusKind::empty)
        CHECK(m.dimC == g - 1 + 2 * d);
    }
}

TEST_CASE("emptiness law: d < (1-genus)/2 is empty") {
  for (int g = 0; g <= 2; ++g)
    for (int d = -4; d <= 4; ++d) {
      if (2 * d >= 1 - g) continue;
      BundleSpec s = mk(g, g == 2 ? BundleKind::stable_generic : BundleKind::split, 0,
                        ClassFlag::generic, d);
      CHECK(classify(s).status == StatusKind::empty);
    }
}

TEST_CASE("sign law and sw_count") {
  CHECK(sw_count(classify(mk(1, BundleKind::split, 0, ClassFlag::generic, 0)), 1) == 2);
  CHECK(sw_count(classify(mk(2, BundleKind::stable_generic, 0, ClassFlag::generic, 0)), 2) ==
        8);
  const auto pb = classify(mk(1, BundleKind::split, 0, ClassFlag::generic, 2));
  CHECK(sw_count(pb, 1) == 0);
  // undefined cases throw
  CHECK_THROWS(sw_count(classify(mk(1, BundleKind::atiyah_e0, 0, ClassFlag::generic, 0)), 1));
  CHECK_THROWS(sw_count(classify(mk(0, BundleKind::split, 0, ClassFlag::generic, 1)), 0));
  // sw = (-1)^{g-1} euler wherever defined
  for (int g = 1; g <= 2; ++g)
    for (int d = -4; d <= 4; ++d) {
      BundleSpec s = mk(g, g == 2 ? BundleKind::stable_generic : BundleKind::split, 0,
                        ClassFlag::generic, d);
      const auto m = classify(s);
      if (m.sw.defined) CHECK(m.sw.value == (g % 2 == 1 ? 1 : -1) * m.euler);
    }
}

TEST_CASE("involution chi(M+(d)) = chi(M+(-d))") {
  CHECK(involution_check(mk(1, BundleKind::split, 0, ClassFlag::generic, 0)));
  CHECK(involution_check(mk(1, BundleKind::split, 0, ClassFlag::generic, 2)));
  CHECK(involution_check(mk(2, BundleKind::stable_generic, 0, ClassFlag::generic, 1)));
  for (int g = 1; g <= 2; ++g)
    for (int d = -4; d <= 4; ++d)
      CHECK(involution_check(mk(g, g == 2 ? BundleKind::stable_generic : BundleKind::split,
                                0, ClassFlag::generic, d)));
}

TEST_CASE("classification consistency with the fueter obstruction at d = 0, m = 0") {
  struct Row {
    ClassFlag cls;
    std::array<double, 2> pt;
  };
  for (const Row& r : {Row{ClassFlag::generic, {0.3, 0.4}},
                       Row{ClassFlag::two_torsion, {0.5, 0.0}},
                       Row{ClassFlag::trivial, {0.0, 0.0}}}) {
    const auto m = classify(mk(1, BundleKind::split, 0, r.cls, 0));
    CHECK(m.fueter_present == fueter_obstruction_exists(0, r.pt));
  }
}

TEST_CASE("theta divisor summary") {
  const auto s = theta_divisor_summary(mk(2, BundleKind::stable_generic, 0, ClassFlag::generic, 0));
  CHECK(s.quotient_curve_genus == 3);
  CHECK(s.moduli_curve_genus == 5);
  CHECK(s.singular_points_avoided == 16);
  CHECK(s.compact);
  const auto ng =
      theta_divisor_summary(mk(2, BundleKind::stable_generic, 0, ClassFlag::two_torsion, 0));
  CHECK_FALSE(ng.compact);
  CHECK(ng.fueter_loci.size() == 2);
  CHECK_THROWS_WITH(theta_divisor_summary(mk(2, BundleKind::stable_generic, 0, ClassFlag::generic, 1)),
                    "theta summary is a d=0 construction");
}

TEST_CASE("census table reproduces the five classification rows") {
  const auto rows = census_table();
  REQUIRE(rows.size() == 8);
  long sw_d0_g1 = 0, sw_d0_g2 = 0;
  for (const auto& r : rows) {
    if (r.item == "1-empty") {
      CHECK(r.desc.status == StatusKind::empty);
      CHECK(r.desc.sw.value == 0);
    }
    if (r.item == "3-projbundle") {
      CHECK(r.desc.status == StatusKind::projective_bundle);
      CHECK(r.desc.sw.value == 0);
    }
    if (r.item == "4-twopoints") sw_d0_g1 = r.desc.sw.value;
    if (r.item == "5-genus5curve") sw_d0_g2 = r.desc.sw.value;
  }
  CHECK(sw_d0_g1 == 2);
  CHECK(sw_d0_g2 == 8);
  // csv stability
  const std::string csv = census_table_csv();
  CHECK(csv.find("4-twopoints,1,split,0,generic,0,points(2),0,2,2,true,false,computed") !=
        std::string::npos);
}
