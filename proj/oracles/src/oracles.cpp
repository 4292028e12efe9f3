#include "hibi/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hibi::oracle {

namespace {

bool covers(const Poset& p, int upper, int lower) {
  if (!p.less(lower, upper)) return false;
  for (int z = 0; z < static_cast<int>(p.size()); ++z) {
    if (p.less(lower, z) && p.less(z, upper)) return false;
  }
  return true;
}

Rational det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> c(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      f(c);
      return;
    }
    for (int x = start; x <= n - (k - depth); ++x) {
      c[depth] = x;
      rec(x + 1, depth + 1);
    }
  };
  rec(0, 0);
}

std::vector<int> iota_from(int first, int count) {
  std::vector<int> v(std::max(count, 0));
  std::iota(v.begin(), v.end(), first);
  return v;
}

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::uint64_t chain_count_dfs(const Poset& p) {
  auto lo = p.bottom();
  auto hi = p.top();
  if (!lo || !hi) throw std::invalid_argument("poset is not bounded");
  std::uint64_t count = 0;
  std::function<void(int)> walk = [&](int x) {
    if (x == *hi) {
      ++count;
      return;
    }
    for (int y = 0; y < static_cast<int>(p.size()); ++y) {
      if (covers(p, y, x)) walk(y);
    }
  };
  walk(*lo);
  return count;
}

std::uint64_t ballot_sequences(unsigned m) {
  std::uint64_t count = 0;
  const unsigned len = 2 * m;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
    int s = 0;
    bool ok = true;
    for (unsigned k = 0; k < len && ok; ++k) {
      s += (bits >> k) & 1 ? 1 : -1;
      ok = s >= 0;
    }
    if (ok && s == 0) ++count;
  }
  return count;
}

int brute_join(const Poset& p, int a, int b) {
  const int n = static_cast<int>(p.size());
  for (int u = 0; u < n; ++u) {
    if (!p.leq(a, u) || !p.leq(b, u)) continue;
    bool least = true;
    for (int v = 0; v < n && least; ++v) {
      if (p.leq(a, v) && p.leq(b, v)) least = p.leq(u, v);
    }
    if (least) return u;
  }
  throw std::invalid_argument("no join");
}

int brute_meet(const Poset& p, int a, int b) {
  const int n = static_cast<int>(p.size());
  for (int u = 0; u < n; ++u) {
    if (!p.leq(u, a) || !p.leq(u, b)) continue;
    bool greatest = true;
    for (int v = 0; v < n && greatest; ++v) {
      if (p.leq(v, a) && p.leq(v, b)) greatest = p.leq(v, u);
    }
    if (greatest) return u;
  }
  throw std::invalid_argument("no meet");
}

bool is_embedded_by_definition(const Poset& p, const std::vector<int>& subset) {
  const int n = static_cast<int>(p.size());
  std::vector<char> in(n, 0);
  for (int x : subset) in[x] = 1;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int j = brute_join(p, a, b), m = brute_meet(p, a, b);
      if (in[a] && in[b] && !(in[j] && in[m])) return false;  // sublattice
      if (in[j] && in[m] && !(in[a] && in[b])) return false;  // pull-back
    }
  }
  return true;
}

std::size_t rational_rank(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Rational>> a;
  for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
  const std::size_t R = a.size(), C = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t p = rank;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < R; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = 0; k < C; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<BigInt> snf_by_minors(const std::vector<std::vector<int>>& rows) {
  std::vector<BigInt> factors;
  if (rows.empty()) return factors;
  const int R = static_cast<int>(rows.size()), C = static_cast<int>(rows[0].size());
  BigInt prev = 1;
  for (int k = 1; k <= std::min(R, C); ++k) {
    BigInt g = 0;
    combinations(R, k, [&](const std::vector<int>& rs) {
      combinations(C, k, [&](const std::vector<int>& cs) {
        std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) m[a][b] = rows[rs[a]][cs[b]];
        Rational d = det(std::move(m));
        g = gcd(g, abs(numerator(d)));
      });
    });
    if (g == 0) break;
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

std::uint64_t standard_monomials(const SqFreeIdeal& ideal, unsigned m) {
  const int n = ideal.n_vars();
  std::uint64_t count = 0;
  std::vector<int> exps(n, 0);
  std::function<void(int, unsigned)> rec = [&](int var, unsigned left) {
    if (var == n) {
      if (left != 0) return;
      std::vector<int> support;
      for (int v = 0; v < n; ++v)
        if (exps[v] > 0) support.push_back(v);
      bool divisible = false;
      for (const auto& g : ideal.generators()) {
        divisible = divisible || std::includes(support.begin(), support.end(), g.begin(), g.end());
      }
      if (!divisible) ++count;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[var] = static_cast<int>(e);
      rec(var + 1, left - e);
    }
    exps[var] = 0;
  };
  rec(0, m);
  return count;
}

std::vector<std::vector<int>> order_ideals_by_filter(const Poset& p) {
  const int n = static_cast<int>(p.size());
  if (n > 20) throw std::invalid_argument("too large for the subset filter");
  std::vector<std::vector<int>> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    bool closed = true;
    for (int x = 0; x < n && closed; ++x) {
      if (!(s >> x & 1u)) continue;
      for (int y = 0; y < n && closed; ++y) {
        if (p.leq(y, x) && !(s >> y & 1u)) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<int> ideal;
    for (int x = 0; x < n; ++x)
      if (s >> x & 1u) ideal.push_back(x);
    out.push_back(std::move(ideal));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> join_irreducibles_by_count(const Poset& p) {
  std::vector<int> out;
  const int n = static_cast<int>(p.size());
  for (int x = 0; x < n; ++x) {
    int lower = 0;
    for (int y = 0; y < n; ++y) lower += covers(p, x, y) ? 1 : 0;
    if (lower <= 1) out.push_back(x);
  }
  return out;
}

WindowTuples window_tuples(int d, int /*n*/, int i, int j) {
  WindowTuples w;
  w.mu = cat(iota_from(1, j), iota_from(i + j + 1, d - j));
  w.A = cat(iota_from(1, j - 1), iota_from(i + j, d - j + 1));
  w.B = cat(iota_from(1, j), iota_from(i + j + 2, d - j));
  w.C = cat(iota_from(1, j - 1), iota_from(i + j + 1, d - j + 1));
  return w;
}

std::vector<std::vector<int>> cover_vectors(
    const GrassmannLattice& G, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& cvs) {
  const auto& L = G.lattice();
  std::vector<std::vector<int>> out;
  for (const auto& [upper, lower] : cvs) {
    std::vector<int> v(L.rank_of_torus(), 0);
    v[L.j_position(G.index(GrassTuple(lower)))] += 1;
    v[L.j_position(G.index(GrassTuple(upper)))] -= 1;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hibi::oracle
