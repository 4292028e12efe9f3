#include "hibi/multiplicity.hpp"

#include "hibi/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace hibi {

namespace {

void check_jblock(int n, const JBlock& b) {
  if (b.i < 1 || b.k < 0 || b.k > n - b.i - 3) {
    throw Error(Errc::IndexOutOfRange, "J-block (i=" + std::to_string(b.i) + ", k=" +
                                           std::to_string(b.k) + ") invalid for n=" + std::to_string(n));
  }
}

BigInt jblock_mult(const JBlock& b) {
  BigInt value = catalan(static_cast<unsigned>(b.k + 2));
  if (value != fixed_point_mult(idn(2, b.k + 4))) {
    throw std::logic_error("catalan(k+2) disagrees with the chain count of I_{2,k+4}");
  }
  return value;
}

}  // namespace

BigInt catalan(unsigned m) { return binomial(2 * m, m) / (m + 1); }

BigInt fixed_point_mult(const DistributiveLattice& L) { return maximal_chain_count(L.poset()); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1 || (k > 0 && parts_[k] > parts_[k - 1])) {
      throw Error(Errc::BadParameters, "partition parts must be positive and weakly decreasing");
    }
  }
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 1) throw Error(Errc::BadParameters, "rectangle needs cols >= 1");
  return Partition(std::vector<int>(rows, cols));
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int col = 0; !parts_.empty() && col < parts_[0]; ++col) {
    int h = 0;
    while (h < static_cast<int>(parts_.size()) && parts_[h] > col) ++h;
    c.push_back(h);
  }
  return Partition(std::move(c));
}

int Partition::hook(int row, int col) const {
  if (row < 0 || row >= static_cast<int>(parts_.size()) || col < 0 || col >= parts_[row]) {
    throw Error(Errc::IndexOutOfRange, "cell outside the diagram");
  }
  int below = 0;
  for (int r = row + 1; r < static_cast<int>(parts_.size()) && parts_[r] > col; ++r) ++below;
  return 1 + (parts_[row] - col - 1) + below;
}

BigInt standard_tableaux_count(const Partition& p) {
  BigInt hooks = 1;
  for (int r = 0; r < static_cast<int>(p.parts().size()); ++r)
    for (int c = 0; c < p.parts()[r]; ++c) hooks *= p.hook(r, c);
  return factorial(static_cast<unsigned>(p.size())) / hooks;
}

BigInt hook_mult(int d, int n) {
  if (d < 1 || n <= d) throw Error(Errc::BadParameters, "hook_mult needs 1 <= d < n");
  // I_{d,n} and I_{n-d,n} are isomorphic; use the shorter side as rows.
  const int rows = std::min(d, n - d);
  const int cols = std::max(d, n - d);
  return standard_tableaux_count(Partition::rectangle(rows, cols));
}

std::string describe(const FaceSpec& f) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, WindowFace>) {
          return "Window(d=" + std::to_string(s.d) + ", n=" + std::to_string(s.n) + ", i=" +
                 std::to_string(s.i) + ", j=" + std::to_string(s.j) + ")";
        } else if constexpr (std::is_same_v<T, JBlockFace>) {
          return "JBlock(n=" + std::to_string(s.n) + ", i=" + std::to_string(s.i) + ", k=" +
                 std::to_string(s.k) + ")";
        } else {
          std::string out = "JBlockUnion(n=" + std::to_string(s.n) + ", [";
          for (std::size_t t = 0; t < s.blocks.size(); ++t) {
            if (t) out += ", ";
            out += "(" + std::to_string(s.blocks[t].i) + "," + std::to_string(s.blocks[t].k) + ")";
          }
          return out + "])";
        }
      },
      f);
}

BigInt face_mult(const FaceSpec& f) {
  if (const auto* w = std::get_if<WindowFace>(&f)) {
    if (w->d < 1 || w->n <= w->d || w->i < 1 || w->i > w->n - w->d - 1 || w->j < 1 || w->j > w->d - 1) {
      throw Error(Errc::IndexOutOfRange, describe(f) + " is not a window of I_{d,n}");
    }
    const BigInt value = 2;
    if (value != fixed_point_mult(diamond_lattice())) {
      throw std::logic_error("window multiplicity disagrees with the diamond chain count");
    }
    return value;
  }
  if (const auto* b = std::get_if<JBlockFace>(&f)) {
    check_jblock(b->n, JBlock{b->i, b->k});
    return jblock_mult(JBlock{b->i, b->k});
  }
  const auto& u = std::get<JBlockUnionFace>(f);
  if (u.blocks.empty()) throw Error(Errc::BadParameters, "at least one J-block is required");
  auto blocks = u.blocks;
  std::sort(blocks.begin(), blocks.end(), [](const JBlock& a, const JBlock& b) { return a.i < b.i; });
  for (const auto& b : blocks) check_jblock(u.n, b);
  for (std::size_t t = 0; t + 1 < blocks.size(); ++t) {
    if (!(blocks[t].i + blocks[t].k + 1 < blocks[t + 1].i)) {
      throw Error(Errc::BlocksOverlapOrTouch, describe(f) + ": blocks intersect or are consecutive");
    }
  }
  BigInt product = 1;
  for (const auto& b : blocks) product *= jblock_mult(b);
  return product;
}

FaceSpec identify_face_family(const GrassmannLattice& G, std::span<const int> D) {
  const ElementSet target = normalized(ElementSet(D.begin(), D.end()));
  const auto& L = G.lattice();
  if (!is_embedded_sublattice(L, target)) throw Error(Errc::NotEmbedded, "D is not an embedded sublattice");
  auto contained = [&](const SingularWindow& w) {
    return std::includes(w.Lij.begin(), w.Lij.end(), target.begin(), target.end());
  };
  if (G.d() != 2) {
    for (const auto& w : all_windows(G)) {
      if (w.Lij == target) return WindowFace{G.d(), G.n(), w.i, w.j};
    }
    throw Error(Errc::UnsupportedFace, "only window faces are recognised for d > 2");
  }
  std::vector<int> runs_of;
  for (const auto& w : all_windows(G)) {
    if (contained(w)) runs_of.push_back(w.i);
  }
  if (runs_of.empty()) throw Error(Errc::UnsupportedFace, "D lies in no window face");
  std::vector<JBlock> blocks;
  for (int i : runs_of) {
    if (!blocks.empty() && blocks.back().i + blocks.back().k + 1 == i) {
      ++blocks.back().k;
    } else {
      blocks.push_back({i, 0});
    }
  }
  if (jblock_union_face(G, blocks) != target) {
    throw Error(Errc::UnsupportedFace, "D is not a union of J-block faces");
  }
  if (blocks.size() == 1) return JBlockFace{G.n(), blocks[0].i, blocks[0].k};
  return JBlockUnionFace{G.n(), blocks};
}

DistributiveLattice diamond_lattice() {
  return lattice_from_poset(Poset::from_labels({"0", "a", "b", "1"}, {{"a", "0"}, {"b", "0"}, {"1", "a"}, {"1", "b"}}));
}

DistributiveLattice chain_lattice(int k) { return lattice_from_poset(chain_poset(k)); }

}  // namespace hibi
