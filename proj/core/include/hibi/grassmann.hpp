#pragma once

#include "hibi/dlattice.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hibi {

/// Strictly increasing tuple 1 <= x(1) < ... < x(d) <= n.
class GrassTuple {
 public:
  GrassTuple() = default;
  explicit GrassTuple(std::vector<int> entries);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<int>& entries() const { return entries_; }
  Label label() const { return Label(entries_); }
  std::string str() const { return label().str(); }

  bool operator==(const GrassTuple&) const = default;
  auto operator<=>(const GrassTuple&) const = default;

 private:
  std::vector<int> entries_;
};

/// I_{d,n} with tuple lookup. Element indices follow the lexicographic order
/// of tuples, which is also the lattice's linear extension.
class GrassmannLattice {
 public:
  GrassmannLattice(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  const DistributiveLattice& lattice() const { return *lattice_; }
  int index(const GrassTuple& x) const;
  GrassTuple tuple(int element) const { return GrassTuple(lattice_->poset().label(element).tuple()); }

 private:
  int d_;
  int n_;
  std::shared_ptr<const DistributiveLattice> lattice_;
};

/// I_{d,n}: all increasing d-tuples in [1,n] under the componentwise order.
/// Throws BadParameters unless 1 <= d < n.
DistributiveLattice idn(int d, int n);

enum class ElementClass { JoinIrr, MeetIrr, Both, Neither };
std::string_view to_string(ElementClass c);

struct Classification {
  ElementClass kind = ElementClass::Neither;
  std::vector<std::vector<int>> segments;  // maximal runs of consecutive entries
};

/// Join/meet irreducibility in I_{d,n} read off from the segment structure.
Classification classify_element(int d, int n, const GrassTuple& x);

/// The window (i, j): mu_ij, lambda_ij, the diamond A, B, C above mu_ij in
/// J(L), and the embedded sublattice L_ij = L \ [mu_ij, lambda_ij].
struct SingularWindow {
  int i = 0;
  int j = 0;
  GrassTuple mu, lambda, A, B, C;
  ElementSet Lij;
};

/// Throws IndexOutOfRange unless 1 <= i <= n-d-1 and 1 <= j <= d-1.
SingularWindow singular_window(const GrassmannLattice& G, int i, int j);
std::vector<SingularWindow> all_windows(const GrassmannLattice& G);

/// A J-block: the union of the consecutive windows (i,1), ..., (i+k,1) in I_{2,n}.
struct JBlock {
  int i = 0;
  int k = 0;
  bool operator==(const JBlock&) const = default;
};

/// D_tau = [(1,2),(i,i+1)] ∪ [(i+k+2,i+k+3),(n-1,n)]. Requires d = 2.
ElementSet jblock_face(const GrassmannLattice& G, int i, int k);

/// Multi-block generalization: the blocks must be pairwise non-intersecting
/// and non-consecutive (i_t + k_t + 1 < i_{t+1}). Requires d = 2. Throws
/// BlocksOverlapOrTouch or IndexOutOfRange.
ElementSet jblock_union_face(const GrassmannLattice& G, std::vector<JBlock> blocks);

/// The interval [(1,3,4), (2,5,6)] of I_{3,6}.
DistributiveLattice counterexample_lattice();

}  // namespace hibi
