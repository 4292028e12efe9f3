#pragma once

// Slow, independent reimplementations used only by tests and the acceptance
// binary. None of these share code paths with the core algorithms they check.

#include "hibi/dlattice.hpp"
#include "hibi/grassmann.hpp"
#include "hibi/hilbert.hpp"

#include <cstdint>
#include <vector>

namespace hibi::oracle {

/// Maximal chains bottom->top by explicit depth-first path enumeration.
std::uint64_t chain_count_dfs(const Poset& p);

/// ±1 sequences of length 2m with nonnegative partial sums and total 0.
std::uint64_t ballot_sequences(unsigned m);

/// Join / meet found by scanning all upper / lower bounds.
int brute_join(const Poset& p, int a, int b);
int brute_meet(const Poset& p, int a, int b);

/// Sublattice closed under join and meet with the pull-back property,
/// checked over all pairs straight from the definition.
bool is_embedded_by_definition(const Poset& p, const std::vector<int>& subset);

/// Rank by Gaussian elimination over Q.
std::size_t rational_rank(const std::vector<std::vector<int>>& rows);

/// Invariant factors d_k / d_{k-1} from determinantal divisors (gcd of
/// k x k minors).
std::vector<BigInt> snf_by_minors(const std::vector<std::vector<int>>& rows);

/// Number of degree-m monomials in n_vars variables outside the ideal.
std::uint64_t standard_monomials(const SqFreeIdeal& ideal, unsigned m);

/// Downward-closed subsets by filtering all 2^n subsets.
std::vector<std::vector<int>> order_ideals_by_filter(const Poset& p);

/// Join-irreducibles (<= 1 lower cover, covers counted by definition).
std::vector<int> join_irreducibles_by_count(const Poset& p);

/// Explicit window diamond mu, A, B, C of (i, j) in I_{d,n} from the
/// closed-form tuples.
struct WindowTuples {
  std::vector<int> mu, A, B, C;
};
WindowTuples window_tuples(int d, int n, int i, int j);

/// Cover generators e_lower - e_upper over J positions, built directly from
/// tuples (upper, lower), with J positions taken from L.
std::vector<std::vector<int>> cover_vectors(const GrassmannLattice& G,
                                            const std::vector<std::pair<std::vector<int>, std::vector<int>>>& covers);

}  // namespace hibi::oracle
