#pragma once

#include <optional>
#include <string>
#include <vector>

namespace vortexlab {

enum class BundleKind {
  split,           // E = O(k) (+) O(-k) at genus 0, M (+) M^{-1} at genus 1
  atiyah_e0,       // the indecomposable extension bundle (genus 1 only)
  stable_generic,  // generic stable bundle (genus >= 2 only)
};

enum class ClassFlag { generic, two_torsion, trivial };

struct BundleSpec {
  int genus = 1;                         // 0, 1, or 2
  BundleKind kind = BundleKind::split;
  int param = 0;                         // k (genus 0) or m (genus 1)
  ClassFlag cls = ClassFlag::generic;    // Jacobian class of the split factor
  int d = 0;                             // deg L
  int sign_of_d_minus_tau = -1;          // -1, 0, +1
};

enum class StatusKind {
  empty,
  points,
  projective_space,
  projective_bundle,
  curve,
  affine_line_with_cp1_compactification,
  noncompact_fibration,
  unclassified,
};

struct SwValue {
  bool defined = false;
  long value = 0;
  std::string reason;  // when undefined
};

struct ModuliDescription {
  StatusKind status = StatusKind::empty;
  long point_count = 0;       // points
  long proj_dim = 0;          // projective_space / fiber of projective_bundle
  std::string base;           // projective_bundle / noncompact_fibration base
  long base_dim = 0;
  long fiber_dim = 0;         // noncompact_fibration fiber
  long curve_genus = 0;       // curve
  long dimC = 0;
  long euler = 0;             // Euler characteristic (of the compactification
                              // when the space is noncompact)
  SwValue sw;
  bool compact = true;
  bool fueter_present = false;
  std::string provenance;     // "paper-transcribed" | "computed"
  std::string note;
  std::string status_string() const;
};

/// Exact classification of the moduli space attached to the bundle data.
/// Genus-1 split cases are rederived by divisor-class arithmetic and
/// cross-checked against the transcribed table; regions the source material
/// does not settle come back as `unclassified`, never guessed.
ModuliDescription classify(const BundleSpec& spec);

/// Signed monopole count (-1)^{genus-1} euler. Throws "not defined" for
/// noncompact descriptions and for genus 0 (the b1 = 1 wall-crossing
/// chamber structure makes the count non-invariant there).
long sw_count(const ModuliDescription& desc, int genus);

/// chi(M+(d)) == chi(M+(-d)) for the generic bundle kind at genus >= 1.
bool involution_check(const BundleSpec& spec);

struct ThetaDivisorSummary {
  bool generic = true;
  long quotient_curve_genus = 3;
  long moduli_curve_genus = 5;
  long singular_points_avoided = 16;
  bool compact = true;
  std::vector<std::string> fueter_loci;
  std::string provenance = "paper-transcribed";
};

/// The genus-2, d = 0 narrative record (Kummer-surface plane section,
/// genus-3 quotient, genus-5 double cover). All integers are transcribed;
/// nothing is recomputed. Throws on d != 0 input.
ThetaDivisorSummary theta_divisor_summary(const BundleSpec& spec);

struct CensusRow {
  std::string item;
  BundleSpec spec;
  ModuliDescription desc;
};

/// Representative instantiations of the five classification rows, used by
/// the `census table` command and the golden-file check.
std::vector<CensusRow> census_table();

/// CSV rendering of census_table(), byte-stable.
std::string census_table_csv();

}  // namespace vortexlab
