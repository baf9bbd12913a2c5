#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lexfan/rational.hpp"

namespace lexfan {

/// An element of the lattice M (or N) in coordinates.
using LatticeVec = std::vector<std::int64_t>;

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

inline std::int64_t dot(const LatticeVec& a, const LatticeVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Integer(static_cast<long>(a[i])) * static_cast<long>(b[i]);
  return to_int64(s);
}

inline bool is_zero(const LatticeVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

inline std::int64_t content(const LatticeVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

/// Divides out the content; the zero vector is returned unchanged.
inline LatticeVec primitive(LatticeVec v) {
  const auto g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline LatticeVec negated(LatticeVec v) {
  for (auto& x : v) x = -x;
  return v;
}

inline std::string lattice_str(const LatticeVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline IntMatrix to_int_matrix(const std::vector<LatticeVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = static_cast<long>(rows[i][j]);
  return m;
}

/// Result of unimodular column reduction: a * q = h, where the first `rank` columns of h are
/// in echelon form (pivot entries positive) and the remaining columns vanish.
struct ColumnEchelon {
  IntMatrix h;
  IntMatrix q;
  std::size_t rank = 0;
};

inline ColumnEchelon column_echelon(const IntMatrix& a, std::size_t cols) {
  ColumnEchelon r;
  r.h = a;
  r.q.assign(cols, std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) r.q[i][i] = 1;
  auto& h = r.h;
  auto& q = r.q;

  // col_p <- x col_p + y col_j ; col_j <- s col_p + t col_j  (applied to h and q)
  auto combine = [&](std::size_t p, std::size_t j, const Integer& x, const Integer& y, const Integer& s,
                     const Integer& t) {
    auto apply = [&](IntMatrix& m) {
      for (auto& row : m) {
        Integer a0 = row[p], b0 = row[j];
        row[p] = x * a0 + y * b0;
        row[j] = s * a0 + t * b0;
      }
    };
    apply(h);
    apply(q);
  };

  std::size_t p = 0;
  for (std::size_t i = 0; i < h.size() && p < cols; ++i) {
    for (std::size_t j = p + 1; j < cols; ++j) {
      if (h[i][j] == 0) continue;
      if (h[i][p] == 0) {
        for (auto* m : {&h, &q})
          for (auto& row : *m) std::swap(row[p], row[j]);
        continue;
      }
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h[i][p].get_mpz_t(), h[i][j].get_mpz_t());
      const Integer s = -h[i][j] / g;
      const Integer t = h[i][p] / g;
      combine(p, j, x, y, s, t);
    }
    if (h[i][p] != 0) {
      if (h[i][p] < 0)
        for (auto* m : {&h, &q})
          for (auto& row : *m) row[p] = -row[p];
      ++p;
    }
  }
  r.rank = p;
  return r;
}

inline LatticeVec column_of(const IntMatrix& m, std::size_t j) {
  LatticeVec v(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) v[i] = to_int64(m[i][j]);
  return v;
}

/// A basis of the saturated lattice {x in Z^cols : rows * x = 0}.
inline std::vector<LatticeVec> integer_kernel(const std::vector<LatticeVec>& rows, std::size_t cols) {
  const auto ech = column_echelon(to_int_matrix(rows, cols), cols);
  std::vector<LatticeVec> basis;
  for (std::size_t j = ech.rank; j < cols; ++j) basis.push_back(column_of(ech.q, j));
  return basis;
}

inline std::size_t lattice_rank(const std::vector<LatticeVec>& rows, std::size_t cols) {
  return column_echelon(to_int_matrix(rows, cols), cols).rank;
}

/// Inverse of a square matrix over Q; nullopt when singular.
inline std::optional<RatMatrix> invert(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const Rational d = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

inline RatMatrix to_rat_matrix(const IntMatrix& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) r[i].emplace_back(x);
  return r;
}

inline RatMatrix to_rat_matrix(const std::vector<LatticeVec>& rows) {
  RatMatrix r(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto x : rows[i]) r[i].emplace_back(static_cast<long>(x));
  return r;
}

/// Indices of a maximal linearly independent subset of `rows`, chosen greedily in order.
inline std::vector<std::size_t> independent_rows(const std::vector<LatticeVec>& rows, std::size_t cols) {
  std::vector<std::size_t> chosen;
  std::vector<LatticeVec> basis;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows.size() && rank < cols; ++i) {
    basis.push_back(rows[i]);
    const auto r = lattice_rank(basis, cols);
    if (r > rank) {
      rank = r;
      chosen.push_back(i);
    } else {
      basis.pop_back();
    }
  }
  return chosen;
}

}  // namespace lexfan
