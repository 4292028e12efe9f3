#pragma once

#include "hibi/dlattice.hpp"

#include <vector>

namespace hibi {

/// Square-free monomial ideal in K[x_0, ..., x_{n_vars-1}], given by the
/// supports of its generators. Non-minimal generators are pruned on
/// construction.
class SqFreeIdeal {
 public:
  SqFreeIdeal() = default;
  /// Throws BadParameters for an empty generator (the unit ideal) or a
  /// variable out of range.
  SqFreeIdeal(int n_vars, std::vector<std::vector<int>> generators);

  int n_vars() const { return n_vars_; }
  /// Sorted supports, sorted lexicographically, pairwise incomparable.
  const std::vector<std::vector<int>>& generators() const { return generators_; }
  bool contains_monomial_support(const std::vector<int>& support) const;

 private:
  int n_vars_ = 0;
  std::vector<std::vector<int>> generators_;
};

struct HilbertData {
  /// faces[s] = #{S : |S| = s, S contains no generator}.
  std::vector<BigInt> faces;
  int krull_dim = 0;
  BigInt degree;
  /// H(t) = numerator(t) / (1 - t)^krull_dim, coefficients from t^0.
  std::vector<BigInt> numerator;

  /// dim R_m = sum over nonempty faces S of C(m-1, |S|-1); phi(0) = 1.
  BigInt phi(unsigned m) const;
  /// Coefficient of t^m in the expansion of the rational series.
  BigInt series_coefficient(unsigned m) const;
};

/// Throws SizeLimitExceeded above 24 variables.
HilbertData sqfree_hilbert(const SqFreeIdeal& ideal);

/// Variables are lattice elements; generators x_a x_b for incomparable a, b.
SqFreeIdeal stanley_reisner_ideal(const DistributiveLattice& L);

struct CrosscheckRow {
  unsigned m = 0;
  BigInt multichains;  // alpha_1 >= ... >= alpha_m in L
  BigInt phi;          // Stanley-Reisner Hilbert function
  BigInt semigroup;    // distinct sums of m ideal indicator vectors
  bool equal() const { return multichains == phi && phi == semigroup; }
};

/// Rows for m = 1..m_max. Throws SizeLimitExceeded unless #L <= 12 and
/// m_max <= 4.
std::vector<CrosscheckRow> lattice_hilbert_crosscheck(const DistributiveLattice& L, unsigned m_max);

}  // namespace hibi
