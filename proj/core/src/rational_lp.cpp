#include "hibi/rational_lp.hpp"

#include "hibi/error.hpp"

#include <optional>

namespace hibi {

std::optional<std::vector<Rational>> cone_combination(
    std::span<const std::vector<int>> generators, const std::vector<int>& target) {
  const std::size_t m = target.size();
  const std::size_t k = generators.size();
  for (const auto& g : generators) {
    if (g.size() != m) throw Error(Errc::BadParameters, "generator dimension mismatch");
  }
  // Columns: k structural variables, then m artificials. Row r is
  // sign_r * (sum_i g_i[r] lambda_i) + a_r = |target_r|.
  const std::size_t cols = k + m;
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const int sign = target[r] < 0 ? -1 : 1;
    for (std::size_t i = 0; i < k; ++i) tab[r][i] = sign * generators[i][r];
    tab[r][k + r] = 1;
    tab[r][cols] = sign * target[r];
    basis[r] = k + r;
  }
  // Phase-one objective: minimize sum of artificials. Reduced costs of the
  // structural columns are -(column sums); artificials start at zero.
  std::vector<Rational> cost(cols + 1, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < k; ++c) cost[c] -= tab[r][c];
    cost[cols] -= tab[r][cols];
  }

  while (true) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (cost[c] < 0) {
        enter = c;  // Bland: lowest index with negative reduced cost
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (tab[r][enter] <= 0) continue;
      Rational ratio = tab[r][cols] / tab[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one
    Rational piv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || tab[r][enter] == 0) continue;
      Rational f = tab[r][enter];
      for (std::size_t c = 0; c <= cols; ++c) tab[r][c] -= f * tab[leave][c];
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (std::size_t c = 0; c <= cols; ++c) cost[c] -= f * tab[leave][c];
    }
    basis[leave] = enter;
  }
  if (cost[cols] != 0) return std::nullopt;  // residual infeasibility
  std::vector<Rational> lambda(k, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < k) lambda[basis[r]] = tab[r][cols];
  }
  return lambda;
}

}  // namespace hibi
