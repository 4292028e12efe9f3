#pragma once

#include "hibi/dlattice.hpp"
#include "hibi/grassmann.hpp"

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hibi {

/// C(2m, m) / (m + 1).
BigInt catalan(unsigned m);

/// Multiplicity at the torus-fixed point: the number of maximal chains of L.
BigInt fixed_point_mult(const DistributiveLattice& L);

/// Weakly decreasing positive parts. Throws BadParameters otherwise.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);
  static Partition rectangle(int rows, int cols);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // number of cells
  /// 1 + cells to the right + cells below, for the cell (row, col), 0-based.
  int hook(int row, int col) const;
  Partition conjugate() const;

 private:
  std::vector<int> parts_;
};

/// f^lambda = m! / prod of hook lengths.
BigInt standard_tableaux_count(const Partition& p);

/// Number of standard tableaux of the d x (n-d) rectangle. Throws
/// BadParameters unless 1 <= d < n.
BigInt hook_mult(int d, int n);

struct WindowFace {
  int d = 0, n = 0, i = 0, j = 0;
};
struct JBlockFace {
  int n = 0, i = 0, k = 0;
};
struct JBlockUnionFace {
  int n = 0;
  std::vector<JBlock> blocks;
};
using FaceSpec = std::variant<WindowFace, JBlockFace, JBlockUnionFace>;

std::string describe(const FaceSpec& f);

/// Window -> 2, JBlock(k) -> catalan(k+2), union -> product over blocks.
/// Each value is cross-checked against a chain count (the diamond lattice
/// and I_{2,k+4}); a mismatch is a logic_error. Throws IndexOutOfRange or
/// BlocksOverlapOrTouch on invalid parameters.
BigInt face_mult(const FaceSpec& f);

/// The proven family a face of I_{d,n} belongs to. For d = 2 the blocks are
/// the maximal runs of windows (i,1) with D ⊆ L_{i1}, and D must equal the
/// rebuilt union face; for d > 2 only D = L_{ij} is recognised. Throws
/// UnsupportedFace otherwise.
FaceSpec identify_face_family(const GrassmannLattice& G, std::span<const int> D);

/// The four-element lattice with two incomparable middle elements.
DistributiveLattice diamond_lattice();

/// Chain with k elements, as a lattice.
DistributiveLattice chain_lattice(int k);

}  // namespace hibi
