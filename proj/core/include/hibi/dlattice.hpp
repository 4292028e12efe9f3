#pragma once

#include "hibi/numeric.hpp"
#include "hibi/poset.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hibi {

/// Subset of J(L) as a bitset over positions in DistributiveLattice::join_irreducibles().
using IdealSet = Bits;

struct IrreducibleSets {
  std::vector<int> join;       // J(L), bottom included, linear-extension order
  std::vector<int> meet;       // M(L), top included
  std::vector<int> join_meet;  // J(L) ∩ M(L)
};

struct Diamond {
  int tau = -1;
  int phi = -1;
  int join = -1;
  int meet = -1;
  bool operator==(const Diamond&) const = default;
};

/// Finite distributive lattice. Meet and join are tabulated at construction;
/// join-irreducibles (bottom included) and the Birkhoff ideals I_alpha are
/// cached. Immutable afterwards.
class DistributiveLattice {
 public:
  DistributiveLattice() = default;

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool leq(int a, int b) const { return poset_.leq(a, b); }

  int join(int a, int b) const { return join_[a * size() + b]; }
  int meet(int a, int b) const { return meet_[a * size() + b]; }

  const IrreducibleSets& irreducibles() const { return irr_; }
  const std::vector<int>& join_irreducibles() const { return irr_.join; }
  std::size_t rank_of_torus() const { return irr_.join.size(); }
  /// Position of x in join_irreducibles(), or -1.
  int j_position(int x) const { return j_pos_[x]; }
  /// Induced subposet on J(L); index k corresponds to join_irreducibles()[k].
  const Poset& j_poset() const { return j_poset_; }

  /// I_alpha = {z in J | z <= alpha}.
  const IdealSet& ideal(int alpha) const { return ideals_[alpha]; }

  /// Incomparable pairs (a < b by index) with their join and meet.
  const std::vector<Diamond>& diamonds() const { return diamonds_; }

  friend DistributiveLattice lattice_from_poset(Poset p);

 private:
  Poset poset_;
  int bottom_ = -1;
  int top_ = -1;
  std::vector<int> join_;
  std::vector<int> meet_;
  IrreducibleSets irr_;
  std::vector<int> j_pos_;
  Poset j_poset_;
  std::vector<IdealSet> ideals_;
  std::vector<Diamond> diamonds_;
};

/// Builds meet/join by order search and verifies the lattice axioms and
/// distributivity. Throws NotALattice or NotDistributive with the witnesses.
/// Distributivity is checked on every triple up to 200 elements and on a
/// fixed-seed sample of triples beyond that.
DistributiveLattice lattice_from_poset(Poset p);

IrreducibleSets irreducibles(const DistributiveLattice& L);

/// Birkhoff correspondence between L and the nonempty ideals of J(L).
struct BirkhoffMap {
  std::vector<IdealSet> ideal_of;  // indexed by element
  /// Join of the members of `ideal`. Throws BadParameters on an empty or
  /// non-downward-closed set.
  int element_of(const IdealSet& ideal) const;

  const DistributiveLattice* lattice = nullptr;
};
BirkhoffMap birkhoff(const DistributiveLattice& L);

/// The unique join-irreducible beta with I_upper = I_lower ∪ {beta}.
/// Throws NotACover.
int cover_delta(const DistributiveLattice& L, int upper, int lower);

bool is_embedded_sublattice(const DistributiveLattice& L, std::span<const int> subset);

/// Restartable, shardable scan over every embedded sublattice (empty set and
/// L included). Subsets are reported as bitmasks over element indices in
/// increasing numeric order. `shard`/`shard_count` split the scan by the
/// decisions on the highest-index elements.
void for_each_embedded_sublattice(const DistributiveLattice& L,
                                  const std::function<void(std::uint32_t)>& visit,
                                  int shard = 0, int shard_count = 1);

/// All embedded sublattices, in increasing bitmask order. Throws
/// SizeLimitExceeded above 24 elements.
std::vector<ElementSet> enumerate_embedded_sublattices(const DistributiveLattice& L,
                                                       int workers = 1);

constexpr std::size_t kMaxBitmaskElements = 24;

ElementSet mask_to_set(std::uint32_t mask);
std::uint32_t set_to_mask(std::span<const int> s);

/// Diamonds (tau, phi incomparable) where x_tau x_phi != x_join x_meet.
std::vector<Diamond> binomial_violations(const DistributiveLattice& L,
                                         std::span<const Rational> point);

/// 0/1 point with ones exactly on `subset`.
std::vector<Rational> characteristic_point(const DistributiveLattice& L,
                                           std::span<const int> subset);

}  // namespace hibi
