#pragma once

#include "hibi/cone.hpp"
#include "hibi/grassmann.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hibi {

/// Exact isomorphism of H-posets (edge direction and marks preserved) by
/// backtracking. Throws SizeLimitExceeded above 24 vertices.
bool h_isomorphic(const HPoset& a, const HPoset& b);

struct HarnessFace {
  ElementSet D;
  bool smooth = false;
  bool gl = false;
  int h_class = -1;
  std::optional<BigInt> multiplicity;  // only for faces in proven families
  std::string family;                  // "smooth", "fixed-point", a FaceSpec, or "unsupported"
};

struct HClass {
  HPoset representative;
  std::vector<std::size_t> faces;       // indices into HarnessReport::faces
  std::vector<BigInt> multiplicities;   // distinct known values, sorted
  bool consistent() const { return multiplicities.size() <= 1; }
};

struct HarnessReport {
  std::vector<HarnessFace> faces;
  std::vector<HClass> classes;
  std::size_t both_smooth = 0;
  std::size_t both_singular = 0;
  std::size_t gl_true_singular = 0;
  std::size_t gl_false_smooth = 0;
  std::size_t known_multiplicities = 0;
  std::size_t inconsistent_classes = 0;

  std::size_t disagreements() const { return gl_true_singular + gl_false_smooth; }
};

/// Every embedded sublattice of L: verdict, gl_criterion, H(tau) class and,
/// for faces in proven families, the multiplicity. When G is given, L must
/// be G's lattice and window / J-block families are recognised. Reports
/// findings only. Throws SizeLimitExceeded above 16 elements.
HarnessReport conjecture_harness(const DistributiveLattice& L, const GrassmannLattice* G = nullptr);

}  // namespace hibi
