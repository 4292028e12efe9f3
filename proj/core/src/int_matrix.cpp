#include "hibi/int_matrix.hpp"

#include "hibi/error.hpp"

#include <algorithm>
#include <numeric>

namespace hibi {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::BadParameters, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

std::size_t rank(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t R = m.rows(), C = m.cols();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && m(p, c) == 0) ++p;
    if (p == R) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::vector<BigInt> smith_normal_form(IntMatrix m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t t = 0;
  for (; t < std::min(R, C); ++t) {
    bool done = false;
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot,
      // re-chosen after every reduction pass to keep multipliers small.
      std::size_t pr = R, pc = C;
      BigInt best;
      for (std::size_t i = t; i < R; ++i) {
        for (std::size_t j = t; j < C; ++j) {
          if (m(i, j) == 0) continue;
          BigInt a = abs(m(i, j));
          if (pr == R || a < best) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == R) {
        done = true;
        break;
      }
      m.swap_rows(t, pr);
      m.swap_cols(t, pc);

      bool dirty = false;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m(i, t) == 0) continue;
        BigInt q = m(i, t) / m(t, t);
        for (std::size_t j = t; j < C; ++j) m(i, j) -= q * m(t, j);
        dirty = dirty || m(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m(t, j) == 0) continue;
        BigInt q = m(t, j) / m(t, t);
        for (std::size_t i = t; i < R; ++i) m(i, j) -= q * m(i, t);
        dirty = dirty || m(t, j) != 0;
      }
      if (dirty) continue;
      // Pivot row and column are clear; enforce d_t | every trailing entry.
      bool fixed = false;
      for (std::size_t i = t + 1; i < R && !fixed; ++i) {
        for (std::size_t j = t + 1; j < C && !fixed; ++j) {
          if (m(i, j) % m(t, t) != 0) {
            for (std::size_t c = t; c < C; ++c) m(t, c) += m(i, c);
            fixed = true;
          }
        }
      }
      if (!fixed) break;
    }
    if (done) break;
  }
  std::vector<BigInt> factors;
  for (std::size_t k = 0; k < t; ++k) factors.push_back(abs(m(k, k)));
  return factors;
}

std::optional<std::vector<BigInt>> row_dependency(const IntMatrix& input) {
  // Solve input^T c = 0 over Q by reduced row echelon form.
  const std::size_t R = input.cols();  // equations
  const std::size_t C = input.rows();  // unknowns
  std::vector<std::vector<Rational>> a(R, std::vector<Rational>(C));
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) a[i][j] = Rational(input(j, i));

  std::vector<int> pivot_col_of_row;
  std::vector<char> is_pivot(C, 0);
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < C; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    is_pivot[c] = 1;
    ++r;
  }
  std::size_t free_col = C;
  for (std::size_t c = 0; c < C; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col == C) return std::nullopt;

  std::vector<Rational> sol(C, Rational(0));
  sol[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) {
    sol[pivot_col_of_row[i]] = -a[i][free_col];
  }
  BigInt lcm_den = 1;
  for (const auto& v : sol) {
    BigInt den = denominator(v);
    lcm_den = lcm_den / gcd(lcm_den, den) * den;
  }
  std::vector<BigInt> out(C);
  BigInt g = 0;
  for (std::size_t j = 0; j < C; ++j) {
    out[j] = numerator(Rational(sol[j] * lcm_den));
    g = gcd(g, abs(out[j]));
  }
  for (auto& v : out) v /= g;
  // Normalize sign: first nonzero coefficient positive.
  auto first = std::find_if(out.begin(), out.end(), [](const BigInt& v) { return v != 0; });
  if (first != out.end() && *first < 0) {
    for (auto& v : out) v = -v;
  }
  return out;
}

namespace {

IntMatrix select_rows(const IntMatrix& m, const std::vector<std::size_t>& rows) {
  IntMatrix s(rows.size(), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s(r, c) = m(rows[r], c);
  return s;
}

std::vector<BigInt> scatter(const std::vector<BigInt>& coeffs, const std::vector<std::size_t>& rows,
                            std::size_t total) {
  std::vector<BigInt> out(total, BigInt(0));
  for (std::size_t k = 0; k < rows.size(); ++k) out[rows[k]] = coeffs[k];
  return out;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<BigInt>> minimal_row_dependency(const IntMatrix& m,
                                                          std::size_t exhaustive_up_to) {
  const std::size_t n = m.rows();
  if (!row_dependency(m)) return std::nullopt;
  for (std::size_t s = 1; s <= std::min(exhaustive_up_to, n); ++s) {
    std::vector<std::size_t> pick(s);
    std::iota(pick.begin(), pick.end(), 0);
    do {
      IntMatrix sub = select_rows(m, pick);
      if (rank(sub) < s) {
        auto dep = row_dependency(sub);
        return scatter(*dep, pick, n);
      }
    } while (next_combination(pick, n));
  }
  std::vector<std::size_t> support(n);
  std::iota(support.begin(), support.end(), 0);
  for (std::size_t k = 0; k < support.size();) {
    std::vector<std::size_t> trial = support;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
    IntMatrix sub = select_rows(m, trial);
    if (rank(sub) < trial.size()) {
      support = std::move(trial);
    } else {
      ++k;
    }
  }
  auto dep = row_dependency(select_rows(m, support));
  return scatter(*dep, support, n);
}

}  // namespace hibi
