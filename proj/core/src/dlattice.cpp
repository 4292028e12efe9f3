#include "hibi/dlattice.hpp"

#include "hibi/error.hpp"
#include "hibi/parallel.hpp"

#include <algorithm>
#include <random>

namespace hibi {

namespace {

constexpr std::size_t kExhaustiveDistributivity = 200;
constexpr std::size_t kSampledTriples = std::size_t{1} << 20;

std::string triple(const Poset& p, int x, int y, int z) {
  return "(" + p.label(x).str() + ", " + p.label(y).str() + ", " + p.label(z).str() + ")";
}

// Least element of `candidates` w.r.t. the order whose "above" sets are `above`,
// found as the first candidate in the linear extension and then verified.
int least_of(const Bits& candidates, const std::vector<Bits>& above_pos,
             const std::vector<int>& topo) {
  auto first = candidates.find_first();
  if (first == Bits::npos) return -1;
  if (!candidates.is_subset_of(above_pos[first])) return -1;
  return topo[first];
}

}  // namespace

DistributiveLattice lattice_from_poset(Poset input) {
  DistributiveLattice L;
  L.poset_ = std::move(input);
  const Poset& p = L.poset_;
  const int n = static_cast<int>(p.size());
  if (n == 0) throw Error(Errc::NotALattice, "empty poset");
  const auto& topo = p.linear_extension();

  // Up/down sets re-indexed by linear-extension position, so that the first
  // set bit of a candidate set is a minimal (resp. maximal) candidate.
  std::vector<Bits> up_pos(n, Bits(n)), down_rev(n, Bits(n));
  for (int x = 0; x < n; ++x) {
    const int px = p.topo_position(x);
    for (int y = 0; y < n; ++y) {
      if (p.leq(x, y)) up_pos[px].set(p.topo_position(y));
      if (p.leq(y, x)) down_rev[n - 1 - px].set(n - 1 - p.topo_position(y));
    }
  }
  std::vector<int> rev_topo(topo.rbegin(), topo.rend());

  L.join_.assign(static_cast<std::size_t>(n) * n, -1);
  L.meet_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      Bits ub = up_pos[p.topo_position(a)] & up_pos[p.topo_position(b)];
      Bits lb = down_rev[n - 1 - p.topo_position(a)] & down_rev[n - 1 - p.topo_position(b)];
      int j = least_of(ub, up_pos, topo);
      int m = least_of(lb, down_rev, rev_topo);
      if (j < 0 || m < 0) {
        throw Error(Errc::NotALattice, "no unique " + std::string(j < 0 ? "join" : "meet") +
                                           " for (" + p.label(a).str() + ", " +
                                           p.label(b).str() + ")");
      }
      L.join_[a * n + b] = L.join_[b * n + a] = j;
      L.meet_[a * n + b] = L.meet_[b * n + a] = m;
    }
  }

  auto check = [&](int x, int y, int z) {
    const int lhs = L.meet(x, L.join(y, z));
    const int rhs = L.join(L.meet(x, y), L.meet(x, z));
    if (lhs != rhs) throw Error(Errc::NotDistributive, triple(p, x, y, z));
  };
  if (static_cast<std::size_t>(n) <= kExhaustiveDistributivity) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = y + 1; z < n; ++z) check(x, y, z);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (std::size_t t = 0; t < kSampledTriples; ++t) check(pick(rng), pick(rng), pick(rng));
  }

  L.bottom_ = *p.bottom();
  L.top_ = *p.top();

  for (int x : topo) {
    if (p.lower_covers(x).size() <= 1) L.irr_.join.push_back(x);
    if (p.upper_covers(x).size() <= 1) L.irr_.meet.push_back(x);
  }
  for (int x : L.irr_.join) {
    if (p.upper_covers(x).size() <= 1) L.irr_.join_meet.push_back(x);
  }

  const int jn = static_cast<int>(L.irr_.join.size());
  L.j_pos_.assign(n, -1);
  for (int k = 0; k < jn; ++k) L.j_pos_[L.irr_.join[k]] = k;
  {
    std::vector<Label> labels;
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < jn; ++a) {
      labels.push_back(p.label(L.irr_.join[a]));
      for (int b = 0; b < jn; ++b) {
        if (!p.less(L.irr_.join[b], L.irr_.join[a])) continue;
        bool direct = true;
        for (int c = 0; c < jn && direct; ++c) {
          if (p.less(L.irr_.join[b], L.irr_.join[c]) && p.less(L.irr_.join[c], L.irr_.join[a])) {
            direct = false;
          }
        }
        if (direct) covers.emplace_back(a, b);
      }
    }
    L.j_poset_ = Poset::from_indices(std::move(labels), covers);
  }

  L.ideals_.assign(n, IdealSet(jn));
  for (int alpha = 0; alpha < n; ++alpha) {
    for (int k = 0; k < jn; ++k) {
      if (p.leq(L.irr_.join[k], alpha)) L.ideals_[alpha].set(k);
    }
  }

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!p.comparable(a, b)) L.diamonds_.push_back({a, b, L.join(a, b), L.meet(a, b)});
    }
  }

  return L;
}

IrreducibleSets irreducibles(const DistributiveLattice& L) { return L.irreducibles(); }

BirkhoffMap birkhoff(const DistributiveLattice& L) {
  BirkhoffMap m;
  m.lattice = &L;
  m.ideal_of.reserve(L.size());
  for (int a = 0; a < static_cast<int>(L.size()); ++a) m.ideal_of.push_back(L.ideal(a));
  return m;
}

int BirkhoffMap::element_of(const IdealSet& ideal) const {
  const auto& L = *lattice;
  if (ideal.size() != L.rank_of_torus()) {
    throw Error(Errc::BadParameters, "ideal has wrong width");
  }
  if (ideal.none()) throw Error(Errc::BadParameters, "empty ideal has no element");
  const auto& J = L.join_irreducibles();
  int acc = -1;
  for (auto k = ideal.find_first(); k != Bits::npos; k = ideal.find_next(k)) {
    acc = acc < 0 ? J[k] : L.join(acc, J[k]);
  }
  if (L.ideal(acc) != ideal) throw Error(Errc::BadParameters, "set is not downward closed in J(L)");
  return acc;
}

int cover_delta(const DistributiveLattice& L, int upper, int lower) {
  if (!L.poset().is_cover(upper, lower)) {
    throw Error(Errc::NotACover, "(" + L.poset().label(upper).str() + ", " +
                                     L.poset().label(lower).str() + ")");
  }
  IdealSet diff = L.ideal(upper) - L.ideal(lower);
  return L.join_irreducibles()[diff.find_first()];
}

bool is_embedded_sublattice(const DistributiveLattice& L, std::span<const int> subset) {
  std::vector<char> in(L.size(), 0);
  for (int x : subset) in[x] = 1;
  // Comparable pairs satisfy both conditions trivially; for a diamond the
  // conditions say "tau, phi in S" iff "join, meet in S".
  for (const auto& d : L.diamonds()) {
    const bool sides = in[d.tau] && in[d.phi];
    const bool diag = in[d.join] && in[d.meet];
    if (sides != diag) return false;
  }
  return true;
}

ElementSet mask_to_set(std::uint32_t mask) {
  ElementSet s;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) s.push_back(i);
  }
  return s;
}

std::uint32_t set_to_mask(std::span<const int> s) {
  std::uint32_t m = 0;
  for (int x : s) m |= std::uint32_t{1} << x;
  return m;
}

void for_each_embedded_sublattice(const DistributiveLattice& L,
                                  const std::function<void(std::uint32_t)>& visit, int shard,
                                  int shard_count) {
  const int n = static_cast<int>(L.size());
  if (static_cast<std::size_t>(n) > kMaxBitmaskElements) {
    throw Error(Errc::SizeLimitExceeded, "embedded-sublattice scan limited to " +
                                             std::to_string(kMaxBitmaskElements) +
                                             " elements (lattice has " + std::to_string(n) + ")");
  }
  if (shard_count < 1 || shard < 0 || shard >= shard_count) {
    throw Error(Errc::BadParameters, "invalid shard");
  }
  struct Constraint {
    std::uint32_t sides;
    std::uint32_t diag;
  };
  // Elements are decided from index n-1 down to 0; a diamond is checked once
  // its smallest index has been decided.
  std::vector<std::vector<Constraint>> bucket(n);
  for (const auto& d : L.diamonds()) {
    int lo = std::min({d.tau, d.phi, d.join, d.meet});
    bucket[lo].push_back({(1u << d.tau) | (1u << d.phi), (1u << d.join) | (1u << d.meet)});
  }
  int prefix_bits = 0;
  while ((1 << prefix_bits) < shard_count && prefix_bits < n) ++prefix_bits;

  auto ok_at = [&](int x, std::uint32_t s) {
    for (const auto& c : bucket[x]) {
      if (((s & c.sides) == c.sides) != ((s & c.diag) == c.diag)) return false;
    }
    return true;
  };

  std::function<void(int, std::uint32_t, std::uint32_t)> rec = [&](int x, std::uint32_t s,
                                                                    std::uint32_t prefix) {
    const int depth = n - 1 - x;
    if (x < 0) {
      visit(s);
      return;
    }
    for (std::uint32_t bit = 0; bit < 2; ++bit) {
      std::uint32_t next_prefix = prefix;
      if (depth < prefix_bits) {
        next_prefix = (prefix << 1) | bit;
        if (depth == prefix_bits - 1 && static_cast<int>(next_prefix % shard_count) != shard) {
          continue;
        }
      }
      std::uint32_t t = bit ? (s | (1u << x)) : s;
      if (ok_at(x, t)) rec(x - 1, t, next_prefix);
    }
  };
  if (prefix_bits == 0 && shard != 0) return;
  rec(n - 1, 0, 0);
}

std::vector<ElementSet> enumerate_embedded_sublattices(const DistributiveLattice& L,
                                                       int workers) {
  const int shards = std::max(1, workers);
  std::vector<std::vector<std::uint32_t>> parts(shards);
  parallel_for(shards, shards, [&](int s) {
    for_each_embedded_sublattice(L, [&](std::uint32_t m) { parts[s].push_back(m); }, s, shards);
  });
  std::vector<std::uint32_t> masks;
  for (auto& p : parts) masks.insert(masks.end(), p.begin(), p.end());
  std::sort(masks.begin(), masks.end());
  std::vector<ElementSet> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(mask_to_set(m));
  return out;
}

std::vector<Diamond> binomial_violations(const DistributiveLattice& L,
                                         std::span<const Rational> point) {
  if (point.size() != L.size()) throw Error(Errc::BadParameters, "point has wrong dimension");
  std::vector<Diamond> out;
  for (const auto& d : L.diamonds()) {
    if (point[d.tau] * point[d.phi] != point[d.join] * point[d.meet]) out.push_back(d);
  }
  return out;
}

std::vector<Rational> characteristic_point(const DistributiveLattice& L,
                                           std::span<const int> subset) {
  std::vector<Rational> pt(L.size(), Rational(0));
  for (int x : subset) pt[x] = 1;
  return pt;
}

}  // namespace hibi
