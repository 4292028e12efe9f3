#include "hibi/hilbert.hpp"

#include "hibi/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>

namespace hibi {

namespace {

constexpr int kMaxVars = 24;
constexpr std::size_t kMaxCrosscheckElements = 12;
constexpr unsigned kMaxCrosscheckDegree = 4;

std::uint32_t support_mask(const std::vector<int>& s) {
  std::uint32_t m = 0;
  for (int v : s) m |= std::uint32_t{1} << v;
  return m;
}

}  // namespace

SqFreeIdeal::SqFreeIdeal(int n_vars, std::vector<std::vector<int>> generators) : n_vars_(n_vars) {
  if (n_vars < 0) throw Error(Errc::BadParameters, "n_vars must be nonnegative");
  for (auto& g : generators) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    if (g.empty()) throw Error(Errc::BadParameters, "empty generator gives the unit ideal");
    if (g.front() < 0 || g.back() >= n_vars) {
      throw Error(Errc::BadParameters, "generator variable out of range [0," + std::to_string(n_vars) + ")");
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    bool redundant = std::any_of(generators.begin(), generators.end(), [&](const std::vector<int>& h) {
      return h != g && std::includes(g.begin(), g.end(), h.begin(), h.end());
    });
    if (!redundant) generators_.push_back(g);
  }
}

bool SqFreeIdeal::contains_monomial_support(const std::vector<int>& support) const {
  std::vector<int> s = support;
  std::sort(s.begin(), s.end());
  return std::any_of(generators_.begin(), generators_.end(), [&](const std::vector<int>& g) {
    return std::includes(s.begin(), s.end(), g.begin(), g.end());
  });
}

BigInt HilbertData::phi(unsigned m) const {
  if (m == 0) return 1;
  BigInt total = 0;
  for (std::size_t s = 1; s < faces.size(); ++s) total += faces[s] * binomial(m - 1, static_cast<long long>(s) - 1);
  return total;
}

BigInt HilbertData::series_coefficient(unsigned m) const {
  // [t^m] t^k / (1-t)^D = C(m - k + D - 1, D - 1); for D = 0 it is [m == k].
  BigInt total = 0;
  for (std::size_t k = 0; k < numerator.size() && k <= m; ++k) {
    const long long r = static_cast<long long>(m) - static_cast<long long>(k);
    BigInt c = krull_dim == 0 ? BigInt(r == 0 ? 1 : 0) : binomial(r + krull_dim - 1, krull_dim - 1);
    total += numerator[k] * c;
  }
  return total;
}

HilbertData sqfree_hilbert(const SqFreeIdeal& ideal) {
  const int n = ideal.n_vars();
  if (n > kMaxVars) throw Error(Errc::SizeLimitExceeded, "sqfree_hilbert is limited to 24 variables");
  std::vector<std::uint32_t> gens;
  for (const auto& g : ideal.generators()) gens.push_back(support_mask(g));

  HilbertData h;
  h.faces.assign(n + 1, BigInt(0));
  std::vector<std::uint64_t> counts(n + 1, 0);
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t s = 0; s < limit; ++s) {
    bool face = std::none_of(gens.begin(), gens.end(), [s](std::uint32_t g) { return (s & g) == g; });
    if (face) ++counts[std::popcount(s)];
  }
  for (int s = 0; s <= n; ++s) {
    h.faces[s] = counts[s];
    if (counts[s] != 0) h.krull_dim = s;
  }
  h.degree = h.faces[h.krull_dim];

  // numerator = sum_s f_s t^s (1-t)^{D-s}
  const int D = h.krull_dim;
  h.numerator.assign(D + 1, BigInt(0));
  for (int s = 0; s <= D; ++s) {
    if (h.faces[s] == 0) continue;
    for (int k = 0; k <= D - s; ++k) {
      BigInt term = h.faces[s] * binomial(D - s, k);
      if (k % 2) term = -term;
      h.numerator[s + k] += term;
    }
  }
  while (h.numerator.size() > 1 && h.numerator.back() == 0) h.numerator.pop_back();
  return h;
}

SqFreeIdeal stanley_reisner_ideal(const DistributiveLattice& L) {
  std::vector<std::vector<int>> gens;
  for (const auto& d : L.diamonds()) gens.push_back({d.tau, d.phi});
  return SqFreeIdeal(static_cast<int>(L.size()), std::move(gens));
}

std::vector<CrosscheckRow> lattice_hilbert_crosscheck(const DistributiveLattice& L, unsigned m_max) {
  if (L.size() > kMaxCrosscheckElements || m_max > kMaxCrosscheckDegree) {
    throw Error(Errc::SizeLimitExceeded, "lattice_hilbert_crosscheck needs #L <= 12 and m_max <= 4");
  }
  const int n = static_cast<int>(L.size());
  const HilbertData h = sqfree_hilbert(stanley_reisner_ideal(L));

  std::vector<std::vector<int>> ideal_vectors;
  for (int a = 0; a < n; ++a) {
    const auto& I = L.ideal(a);
    std::vector<int> v(I.size());
    for (std::size_t k = 0; k < I.size(); ++k) v[k] = I[k] ? 1 : 0;
    ideal_vectors.push_back(std::move(v));
  }
  const std::size_t dim = L.rank_of_torus();

  std::vector<CrosscheckRow> rows;
  std::vector<BigInt> chains_ending(n, BigInt(1));  // multichains of length m with top element x
  for (unsigned m = 1; m <= m_max; ++m) {
    if (m > 1) {
      std::vector<BigInt> next(n, BigInt(0));
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (L.leq(y, x)) next[x] += chains_ending[y];
      chains_ending = std::move(next);
    }
    CrosscheckRow row;
    row.m = m;
    for (const auto& c : chains_ending) row.multichains += c;
    row.phi = h.phi(m);

    std::set<std::vector<int>> sums;
    std::vector<int> acc(dim, 0);
    std::function<void(int, unsigned)> rec = [&](int from, unsigned left) {
      if (left == 0) {
        sums.insert(acc);
        return;
      }
      for (int a = from; a < n; ++a) {
        for (std::size_t k = 0; k < dim; ++k) acc[k] += ideal_vectors[a][k];
        rec(a, left - 1);
        for (std::size_t k = 0; k < dim; ++k) acc[k] -= ideal_vectors[a][k];
      }
    };
    rec(0, m);
    row.semigroup = sums.size();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hibi
