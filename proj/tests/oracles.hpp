#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the elimination or expansion code under test.

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "rbd/rational.hpp"

namespace oracle {

using rbd::Rational;

// m/q for [b1, ..., bk], evaluated from the tail.
inline Rational hj_value(const std::vector<std::int64_t>& b) {
  Rational x(b.back());
  for (std::size_t i = b.size() - 1; i-- > 0;) x = Rational(b[i]) - x.inverse();
  return x;
}

// Determinant of the chain matrix (diagonal -b_i, ones beside it) by the
// continuant recurrence.
inline rbd::Integer chain_det(const std::vector<std::int64_t>& b) {
  rbd::Integer prev = 1, cur = -b[0];
  for (std::size_t i = 1; i < b.size(); ++i) {
    rbd::Integer next = -b[i] * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Plain Gaussian elimination on a dense (not necessarily symmetric) matrix.
inline Rational dense_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// Signs of leading principal minors.
inline std::vector<int> leading_minor_signs(const std::vector<std::vector<Rational>>& m) {
  std::vector<int> out;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
    out.push_back(dense_det(sub).sign());
  }
  return out;
}

// Sylvester resultant of p and q (coefficients low to high, both nonzero
// leading coefficient).
inline Rational resultant(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  const std::size_t m = p.size() - 1, n = q.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = p[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = q[n - j];
  return dense_det(s);
}

inline std::vector<Rational> derivative(const std::vector<Rational>& p) {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<std::int64_t>(k)));
  return d;
}

struct TFact {
  std::int64_t d, n, a;
};

// Every (d, n, a) with d n^2 = r, d n a - 1 = q mod r, 1 <= a < n, gcd(a, n) = 1.
inline std::vector<TFact> t_factorizations(std::int64_t r, std::int64_t q) {
  std::vector<TFact> out;
  for (std::int64_t n = 2; n * n <= r; ++n) {
    for (std::int64_t d = 1; d * n * n <= r; ++d) {
      if (d * n * n != r) continue;
      for (std::int64_t a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        if (((d * n * a - 1) % r + r) % r == q) out.push_back({d, n, a});
      }
    }
  }
  return out;
}

// Strings reachable from [4] by the two Wahl rewrites, with value numerator
// at most bound.
inline std::set<std::vector<std::int64_t>> wahl_closure(std::int64_t bound) {
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> stack{{4}};
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    if (hj_value(s).num() > bound || !seen.insert(s).second) continue;
    auto left = s;
    left.front() += 1;
    left.push_back(2);
    auto right = s;
    right.back() += 1;
    right.insert(right.begin(), 2);
    stack.push_back(left);
    stack.push_back(right);
  }
  return seen;
}

}  // namespace oracle
