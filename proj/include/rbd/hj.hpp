#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rbd/rational.hpp"
#include "rbd/symmatrix.hpp"

namespace rbd {

// Linear chain of rational curves with self-intersections -b_1, ..., -b_k,
// valued as b_1 - 1/(b_2 - 1/(... - 1/b_k)). Every term is >= 2.
class HJString {
public:
  // Throws InvalidFraction when empty or when some term is < 2.
  explicit HJString(std::vector<std::int64_t> terms);

  const std::vector<std::int64_t>& terms() const noexcept { return terms_; }
  std::size_t length() const noexcept { return terms_.size(); }
  HJString reversed() const;

  // Chain intersection form: diagonal -b_i, 1 between neighbours.
  SymMatrix intersection_matrix() const;

  std::string str() const;

  friend bool operator==(const HJString&, const HJString&) = default;

private:
  std::vector<std::int64_t> terms_;
};

// L(m, q), stored with 0 < q < m and gcd(q, m) = 1.
class LensSpace {
public:
  // q is reduced mod m; throws InvalidFraction unless m >= 2 and gcd(q, m) = 1.
  LensSpace(std::int64_t m, std::int64_t q);

  std::int64_t m() const noexcept { return m_; }
  std::int64_t q() const noexcept { return q_; }
  std::string str() const;

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

private:
  std::int64_t m_;
  std::int64_t q_;
};

// Unique expansion m/q = [b_1, ..., b_k] with all b_i >= 2 (ceiling recursion).
HJString hj_expand(std::int64_t m, std::int64_t q);

// m/q in lowest terms.
Rational hj_value(const HJString& s);

// Expansion of p^2/(pq - 1): the chain C_{p,q}. Throws InvalidPQ.
HJString cpq_string(std::int64_t p, std::int64_t q);

// L(m, q) with m/q = hj_value(s).
LensSpace lens_of_chain(const HJString& s);

// Oriented: q_b in {q_a, q_a^-1}; with reversal also {-q_a, -q_a^-1} (mod m).
bool lens_equivalent(const LensSpace& a, const LensSpace& b, bool allow_reversal);

// hj_expand(m, m - q).
HJString dual_string(std::int64_t m, std::int64_t q);

}  // namespace rbd
