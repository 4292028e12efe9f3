#include "hibi/grassmann.hpp"

#include "hibi/error.hpp"

#include <algorithm>
#include <numeric>

namespace hibi {

namespace {

void require_d2(const GrassmannLattice& G, const char* op) {
  if (G.d() != 2) {
    throw Error(Errc::BadParameters,
                std::string(op) + " is defined for I_{2,n} only (got d=" + std::to_string(G.d()) + ")");
  }
}

std::vector<int> range_tuple(int first, int count) {
  std::vector<int> t(count);
  std::iota(t.begin(), t.end(), first);
  return t;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void add_interval(const GrassmannLattice& G, const GrassTuple& lo, const GrassTuple& hi,
                  ElementSet& out) {
  const auto& L = G.lattice();
  const int a = G.index(lo);
  const int b = G.index(hi);
  for (int x = 0; x < static_cast<int>(L.size()); ++x) {
    if (L.leq(a, x) && L.leq(x, b)) out.push_back(x);
  }
}

}  // namespace

GrassTuple::GrassTuple(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] < 1 || (k > 0 && entries_[k] <= entries_[k - 1])) {
      throw Error(Errc::BadParameters, "tuple entries must be positive and strictly increasing");
    }
  }
}

DistributiveLattice idn(int d, int n) {
  if (d < 1 || n <= d) {
    throw Error(Errc::BadParameters, "I_{d,n} needs 1 <= d < n (got d=" + std::to_string(d) +
                                         ", n=" + std::to_string(n) + ")");
  }
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur = range_tuple(1, d);
  while (true) {
    tuples.push_back(cur);
    int k = d - 1;
    while (k >= 0 && cur[k] == n - d + 1 + k) --k;
    if (k < 0) break;
    ++cur[k];
    for (int t = k + 1; t < d; ++t) cur[t] = cur[t - 1] + 1;
  }
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(tuples.size()); ++i) index[tuples[i]] = i;

  std::vector<std::pair<int, int>> covers;
  std::vector<Label> labels;
  for (int i = 0; i < static_cast<int>(tuples.size()); ++i) {
    labels.emplace_back(tuples[i]);
    for (int k = 0; k < d; ++k) {
      auto up = tuples[i];
      ++up[k];
      if (up[k] > n || (k + 1 < d && up[k] == up[k + 1])) continue;
      covers.emplace_back(index.at(up), i);
    }
  }
  return lattice_from_poset(Poset::from_indices(std::move(labels), covers));
}

GrassmannLattice::GrassmannLattice(int d, int n)
    : d_(d), n_(n), lattice_(std::make_shared<const DistributiveLattice>(idn(d, n))) {}

int GrassmannLattice::index(const GrassTuple& x) const {
  if (static_cast<int>(x.size()) != d_ || (d_ > 0 && x[d_ - 1] > n_)) {
    throw Error(Errc::UnknownElement, x.str() + " is not in I_{" + std::to_string(d_) + "," +
                                          std::to_string(n_) + "}");
  }
  return lattice_->poset().index_of(x.label());
}

std::string_view to_string(ElementClass c) {
  switch (c) {
    case ElementClass::JoinIrr: return "JoinIrr";
    case ElementClass::MeetIrr: return "MeetIrr";
    case ElementClass::Both: return "Both";
    case ElementClass::Neither: return "Neither";
  }
  return "Neither";
}

Classification classify_element(int d, int n, const GrassTuple& x) {
  if (static_cast<int>(x.size()) != d || x[d - 1] > n) {
    throw Error(Errc::BadParameters, x.str() + " is not an element of I_{d,n}");
  }
  Classification c;
  for (int v : x.entries()) {
    if (c.segments.empty() || c.segments.back().back() + 1 != v) c.segments.push_back({});
    c.segments.back().push_back(v);
  }
  const auto& s = c.segments;
  const bool single = s.size() == 1;
  const bool pair = s.size() == 2;
  const bool join_irr = single || (pair && s[0].front() == 1);
  const bool meet_irr = single || (pair && s[1].back() == n);
  c.kind = join_irr && meet_irr ? ElementClass::Both
           : join_irr           ? ElementClass::JoinIrr
           : meet_irr           ? ElementClass::MeetIrr
                                : ElementClass::Neither;
  return c;
}

SingularWindow singular_window(const GrassmannLattice& G, int i, int j) {
  const int d = G.d();
  const int n = G.n();
  if (i < 1 || i > n - d - 1 || j < 1 || j > d - 1) {
    throw Error(Errc::IndexOutOfRange, "window (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") needs 1<=i<=" + std::to_string(n - d - 1) +
                                           ", 1<=j<=" + std::to_string(d - 1));
  }
  SingularWindow w;
  w.i = i;
  w.j = j;
  w.mu = GrassTuple(concat(range_tuple(1, j), range_tuple(i + j + 1, d - j)));
  w.lambda = GrassTuple(concat(range_tuple(i + 1, j), range_tuple(n + 1 + j - d, d - j)));

  const auto& L = G.lattice();
  const int mu = G.index(w.mu);
  const int jmu = L.j_position(mu);
  const auto& ups = L.j_poset().upper_covers(jmu);
  if (jmu < 0 || ups.size() != 2) {
    throw Error(Errc::BadParameters, "mu_ij does not have two covers in J(L)");
  }
  // B keeps the leading segment (1, ..., j); A shortens it.
  GrassTuple first = G.tuple(L.join_irreducibles()[ups[0]]);
  GrassTuple second = G.tuple(L.join_irreducibles()[ups[1]]);
  auto keeps_prefix = [j](const GrassTuple& t) {
    for (int k = 0; k < j; ++k) {
      if (t[k] != k + 1) return false;
    }
    return true;
  };
  if (keeps_prefix(first)) std::swap(first, second);
  w.A = first;
  w.B = second;
  // C is the join of A and B inside the poset J(L), not in L.
  const auto& JP = L.j_poset();
  const int ja = L.j_position(G.index(w.A));
  const int jb = L.j_position(G.index(w.B));
  std::vector<int> above;
  for (int c = 0; c < static_cast<int>(JP.size()); ++c) {
    if (JP.leq(ja, c) && JP.leq(jb, c)) above.push_back(c);
  }
  auto least = std::find_if(above.begin(), above.end(), [&](int c) {
    return std::all_of(above.begin(), above.end(), [&](int o) { return JP.leq(c, o); });
  });
  if (least == above.end()) throw Error(Errc::BadParameters, "A and B have no join in J(L)");
  w.C = G.tuple(L.join_irreducibles()[*least]);

  const int lam = G.index(w.lambda);
  for (int x = 0; x < static_cast<int>(L.size()); ++x) {
    if (!(L.leq(mu, x) && L.leq(x, lam))) w.Lij.push_back(x);
  }
  return w;
}

std::vector<SingularWindow> all_windows(const GrassmannLattice& G) {
  std::vector<SingularWindow> out;
  for (int i = 1; i <= G.n() - G.d() - 1; ++i) {
    for (int j = 1; j <= G.d() - 1; ++j) out.push_back(singular_window(G, i, j));
  }
  return out;
}

ElementSet jblock_face(const GrassmannLattice& G, int i, int k) {
  return jblock_union_face(G, {JBlock{i, k}});
}

ElementSet jblock_union_face(const GrassmannLattice& G, std::vector<JBlock> blocks) {
  require_d2(G, "jblock_union_face");
  const int n = G.n();
  if (blocks.empty()) throw Error(Errc::BadParameters, "at least one J-block is required");
  std::sort(blocks.begin(), blocks.end(),
            [](const JBlock& a, const JBlock& b) { return a.i < b.i; });
  for (const auto& b : blocks) {
    if (b.i < 1 || b.k < 0 || b.k > n - b.i - 3) {
      throw Error(Errc::IndexOutOfRange, "J-block (i=" + std::to_string(b.i) +
                                             ", k=" + std::to_string(b.k) + ") invalid for n=" +
                                             std::to_string(n));
    }
  }
  for (std::size_t t = 0; t + 1 < blocks.size(); ++t) {
    if (!(blocks[t].i + blocks[t].k + 1 < blocks[t + 1].i)) {
      throw Error(Errc::BlocksOverlapOrTouch,
                  "blocks starting at " + std::to_string(blocks[t].i) + " and " +
                      std::to_string(blocks[t + 1].i) + " intersect or are consecutive");
    }
  }
  ElementSet D;
  int lo = 1;  // lower interval starts at (lo, lo+1)
  for (const auto& b : blocks) {
    add_interval(G, GrassTuple({lo, lo + 1}), GrassTuple({b.i, b.i + 1}), D);
    lo = b.i + b.k + 2;
  }
  add_interval(G, GrassTuple({lo, lo + 1}), GrassTuple({n - 1, n}), D);
  return normalized(std::move(D));
}

DistributiveLattice counterexample_lattice() {
  GrassmannLattice G(3, 6);
  const auto& P = G.lattice().poset();
  Poset sub = interval(P, G.index(GrassTuple({1, 3, 4})), G.index(GrassTuple({2, 5, 6})));
  return lattice_from_poset(std::move(sub));
}

}  // namespace hibi
