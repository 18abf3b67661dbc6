#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rbd/rational.hpp"

namespace rbd {

// Symmetric matrix with exact rational entries, stored row-major.
class SymMatrix {
public:
  // Zero matrix of the given dimension.
  explicit SymMatrix(std::size_t dimension);
  // Throws NotSymmetric for ragged, non-square or asymmetric input.
  explicit SymMatrix(const std::vector<std::vector<Rational>>& rows);

  std::size_t dimension() const noexcept { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  // Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const Rational& value);

  std::vector<std::vector<Rational>> rows() const;
  std::vector<Rational> apply(std::span<const Rational> v) const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

struct Inertia {
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;
  std::size_t n_plus = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Sylvester inertia by symmetric Gaussian elimination. When no nonzero
// diagonal pivot remains, a congruence i += j on a nonzero off-diagonal entry
// creates one.
Inertia inertia(const SymMatrix& m);

// Exact determinant by row reduction.
Rational determinant(const SymMatrix& m);

// Solves m x = v exactly; throws SingularMatrix when det m = 0.
std::vector<Rational> solve_symmetric(const SymMatrix& m, std::span<const Rational> v);

}  // namespace rbd
