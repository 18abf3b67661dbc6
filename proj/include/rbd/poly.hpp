#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rbd/error.hpp"
#include "rbd/gauss.hpp"
#include "rbd/rational.hpp"

namespace rbd {

// Dense univariate polynomial over an exact field; coefficients_[k] is the
// coefficient of y^k. The zero polynomial has no coefficients.
template <typename Field>
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Field> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
  }
  UniPoly(std::initializer_list<Field> coefficients) : coefficients_(coefficients) { trim(); }

  static UniPoly monomial(Field c, std::size_t degree) {
    std::vector<Field> coeffs(degree + 1);
    coeffs[degree] = std::move(c);
    return UniPoly(std::move(coeffs));
  }

  bool is_zero() const { return coefficients_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  const std::vector<Field>& coefficients() const noexcept { return coefficients_; }
  Field coefficient(std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : Field{};
  }
  const Field& leading() const { return coefficients_.back(); }

  Field operator()(const Field& y) const {
    Field acc{};
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * y + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (coefficients_.size() <= 1) return {};
    std::vector<Field> d(coefficients_.size() - 1);
    for (std::size_t k = 1; k < coefficients_.size(); ++k) {
      d[k - 1] = coefficients_[k] * Field(static_cast<long long>(k));
    }
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    Field inv = Field(1) / leading();
    std::vector<Field> c = coefficients_;
    for (auto& x : c) x *= inv;
    return UniPoly(std::move(c));
  }

  // Euclidean division; throws ZeroPolynomial when dividing by zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
    std::vector<Field> rem = coefficients_;
    long dd = divisor.degree();
    if (degree() < dd) return {UniPoly{}, *this};
    std::vector<Field> quot(static_cast<std::size_t>(degree() - dd + 1));
    Field lead_inv = Field(1) / divisor.leading();
    for (long k = degree(); k >= dd; --k) {
      Field c = rem[static_cast<std::size_t>(k)] * lead_inv;
      if (c.is_zero()) continue;
      quot[static_cast<std::size_t>(k - dd)] = c;
      for (long j = 0; j <= dd; ++j) {
        rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coefficients_[j];
      }
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
  }

  UniPoly& operator+=(const UniPoly& rhs) {
    if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
    for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) coefficients_[k] += rhs.coefficients_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& rhs) { return *this += -rhs; }
  UniPoly operator-() const {
    std::vector<Field> c = coefficients_;
    for (auto& x : c) x = -x;
    return UniPoly(std::move(c));
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Field> c(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
      if (a.coefficients_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
        c[i + j] += a.coefficients_[i] * b.coefficients_[j];
      }
    }
    return UniPoly(std::move(c));
  }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
      const Field& c = coefficients_[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      std::string cs = c.str();
      if (cs.find_first_of("+-", 1) != std::string::npos) cs = "(" + cs + ")";
      if (!out.empty()) out += " + ";
      if (k == 0) {
        out += cs;
        continue;
      }
      if (cs == "-1") {
        out += "-";
      } else if (cs != "1") {
        out += cs + "*";
      }
      out += k == 1 ? std::string("y") : "y^" + std::to_string(k);
    }
    return out;
  }

private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
  }

  std::vector<Field> coefficients_;
};

// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <typename Field>
UniPoly<Field> poly_gcd(UniPoly<Field> a, UniPoly<Field> b) {
  while (!b.is_zero()) {
    UniPoly<Field> r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// True iff gcd(p, p') is a nonzero constant.
template <typename Field>
bool squarefree(const UniPoly<Field>& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree of the zero polynomial");
  return poly_gcd(p, p.derivative()).degree() == 0;
}

using RationalPoly = UniPoly<Rational>;
using GaussPoly = UniPoly<GaussRational>;

}  // namespace rbd
