#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "rbd/rational.hpp"

namespace rbd {

// Element re + im*i of Q(i), the field of 4th roots of unity.
class GaussRational {
public:
  GaussRational() = default;
  template <std::integral T>
  GaussRational(T re) : re_(re) {}
  GaussRational(Rational re) : re_(std::move(re)) {}
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }
  // i^k for any integer k.
  static GaussRational i_pow(std::int64_t k);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussRational inverse() const;
  GaussRational pow(std::int64_t k) const;

  // "a/b+c/d*i" (or "a/b-c/d*i" for negative imaginary part).
  std::string str() const;
  static GaussRational parse(std::string_view text);

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& rhs);
  GaussRational& operator-=(const GaussRational& rhs);
  GaussRational& operator*=(const GaussRational& rhs);
  GaussRational& operator/=(const GaussRational& rhs);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational&, const GaussRational&) = default;

  friend std::ostream& operator<<(std::ostream& os, const GaussRational& z) {
    return os << z.str();
  }

private:
  Rational re_;
  Rational im_;
};

}  // namespace rbd
