#include "rbd/symmatrix.hpp"

#include <algorithm>
#include <utility>

#include "rbd/error.hpp"

namespace rbd {

namespace {

using Dense = std::vector<std::vector<Rational>>;

}  // namespace

SymMatrix::SymMatrix(std::size_t dimension) : n_(dimension), entries_(dimension * dimension) {}

SymMatrix::SymMatrix(const Dense& rows) : n_(rows.size()), entries_() {
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error(ErrorCode::NotSymmetric, "matrix is not square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        throw Error(ErrorCode::NotSymmetric, "entry (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ") differs from its transpose");
      }
    }
  }
}

void SymMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  entries_[i * n_ + j] = value;
  entries_[j * n_ + i] = value;
}

Dense SymMatrix::rows() const {
  Dense out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  }
  return out;
}

std::vector<Rational> SymMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != n_) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
  std::vector<Rational> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

Inertia inertia(const SymMatrix& m) {
  Dense a = m.rows();
  std::vector<std::size_t> active(m.dimension());
  for (std::size_t k = 0; k < active.size(); ++k) active[k] = k;
  Inertia result;

  while (!active.empty()) {
    auto pivot_it = std::find_if(active.begin(), active.end(),
                                 [&](std::size_t k) { return !a[k][k].is_zero(); });
    if (pivot_it == active.end()) {
      // Zero diagonal: look for a nonzero off-diagonal entry.
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t x = 0; x < active.size() && !found; ++x) {
        for (std::size_t y = x + 1; y < active.size() && !found; ++y) {
          if (!a[active[x]][active[y]].is_zero()) {
            pi = active[x];
            pj = active[y];
            found = true;
          }
        }
      }
      if (!found) {
        result.n_zero += active.size();
        break;
      }
      // Congruence row_i += row_j, col_i += col_j; new a_ii = 2 a_ij != 0.
      for (std::size_t k : active) a[pi][k] += a[pj][k];
      for (std::size_t k : active) a[k][pi] += a[k][pj];
      continue;
    }

    std::size_t p = *pivot_it;
    active.erase(pivot_it);
    const Rational pivot = a[p][p];
    if (pivot.sign() < 0) {
      ++result.n_minus;
    } else {
      ++result.n_plus;
    }
    for (std::size_t r : active) {
      if (a[r][p].is_zero()) continue;
      Rational factor = a[r][p] / pivot;
      for (std::size_t c : active) {
        if (!a[p][c].is_zero()) a[r][c] -= factor * a[p][c];
      }
      a[r][p] = 0;
    }
  }
  return result;
}

Rational determinant(const SymMatrix& m) {
  Dense a = m.rows();
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) {
        if (!a[col][c].is_zero()) a[r][c] -= factor * a[col][c];
      }
    }
  }
  return det;
}

std::vector<Rational> solve_symmetric(const SymMatrix& m, std::span<const Rational> v) {
  const std::size_t n = m.dimension();
  if (v.size() != n) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
  Dense a = m.rows();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(v[i]);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorCode::SingularMatrix, "matrix has zero determinant");
    std::swap(a[pivot], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) {
        if (!a[col][c].is_zero()) a[r][c] -= factor * a[col][c];
      }
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

}  // namespace rbd
