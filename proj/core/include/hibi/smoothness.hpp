#pragma once

#include "hibi/cone.hpp"
#include "hibi/grassmann.hpp"
#include "hibi/int_matrix.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace hibi {

/// Indices of the vectors that survive redundancy pruning: in input order,
/// each vector lying in the rational cone of the other survivors is dropped.
/// Idempotent. Throws SizeLimitExceeded above 64 vectors or dimension 64.
std::vector<int> irredundant_generators(std::span<const std::vector<int>> vectors);

enum class SmoothStatus { Smooth, Singular };
std::string_view to_string(SmoothStatus s);

struct SmoothnessVerdict {
  enum class Evidence { Independent, Dependency, Nonunimodular };

  SmoothStatus status = SmoothStatus::Smooth;
  Evidence evidence = Evidence::Independent;
  std::vector<Generator> generators;       // W(tau)
  std::vector<int> kept;                   // indices into generators
  std::vector<int> pruned;                 // indices into generators
  std::size_t rank = 0;
  std::vector<BigInt> invariant_factors;   // SNF of the kept rows
  std::vector<BigInt> dependency;          // aligned with generators; empty unless Evidence::Dependency

  bool pruning_fired() const { return !pruned.empty(); }
  bool smooth() const { return status == SmoothStatus::Smooth; }
};
std::string_view to_string(SmoothnessVerdict::Evidence e);

/// Smooth iff the irredundant part of W(tau) is linearly independent and
/// its Smith invariant factors are all 1. Throws NotEmbedded.
SmoothnessVerdict is_smooth_face(const DistributiveLattice& L, std::span<const int> D);

/// Re-derives the evidence: the dependency multiplies out to zero, or the
/// invariant factors match a fresh SNF of the kept rows.
bool replay_evidence(const SmoothnessVerdict& v);

/// For every incomparable pair (theta, delta) in J(L) ∩ M(L), D meets
/// [theta ∧ delta, theta ∨ delta]. Throws NotEmbedded.
bool gl_criterion(const DistributiveLattice& L, std::span<const int> D);

struct WindowReport {
  SingularWindow window;
  std::vector<Generator> generators;  // from the generic filter
  bool matches_diamond = false;       // generators == the four diamond covers
  FaceGeometry geometry;
  SmoothnessVerdict verdict;
  BigInt multiplicity;
};

/// The four cover generators mu->A, mu->B, A->C, B->C of a window, in
/// cone_generators order.
std::vector<Generator> window_diamond_generators(const GrassmannLattice& G, const SingularWindow& w);

/// Result of checking every embedded sublattice of I_{d,n}.
struct FaceScan {
  std::size_t faces = 0;
  std::size_t smooth = 0;
  std::size_t singular = 0;
  // counts[smooth][no window contains D][gl_criterion]
  std::size_t counts[2][2][2] = {};
  std::size_t disagreements = 0;
  std::vector<ElementSet> disagreement_examples;  // first few
  std::size_t pruning_fired = 0;
  bool dependencies_contain_window_diamond = true;
  bool evidence_replays = true;
  // Inclusion-maximal singular D (the minimal singular faces).
  std::vector<ElementSet> maximal_singular;
  bool maximal_singular_are_windows = true;
  bool maximal_singular_dim3 = true;
  bool dims_add_up = true;

  bool ok() const {
    return disagreements == 0 && dependencies_contain_window_diamond && evidence_replays &&
           maximal_singular_are_windows && maximal_singular_dim3 && dims_add_up;
  }
};

/// Exhaustive scan; sharded over `workers` threads, merged deterministically.
FaceScan scan_idn_faces(const GrassmannLattice& G, int workers = 1);

struct SingularLocusReport {
  int d = 0;
  int n = 0;
  std::vector<WindowReport> windows;
  std::optional<FaceScan> scan;

  bool windows_ok() const;
  bool ok() const { return windows_ok() && (!scan || scan->ok()); }
};

/// All windows of I_{d,n} with generator, dimension, verdict and
/// multiplicity checks; optionally the exhaustive face scan. Throws
/// BadParameters, or SizeLimitExceeded for an exhaustive scan of more than
/// 24 elements.
SingularLocusReport singular_locus_idn(int d, int n, bool exhaustive = false, int workers = 1);

}  // namespace hibi
