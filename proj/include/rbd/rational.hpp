#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rbd {

using Integer = boost::multiprecision::cpp_int;

// Exact fraction, always reduced with a positive denominator.
class Rational {
public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : num_(value) {}
  Rational(Integer value) : num_(std::move(value)) {}
  Rational(Integer num, Integer den);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  // Throws InvalidArgument unless the value is an integer fitting in 64 bits.
  std::int64_t to_int64() const;

  Rational inverse() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // "a/b", with "/b" omitted when b == 1.
  std::string str() const;
  static Rational parse(std::string_view text);

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  void reduce();

  Integer num_{0};
  Integer den_{1};
};

// Greatest common divisor and modular inverse on machine integers, shared by
// the combinatorial modules.
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
// Inverse of a modulo m; throws InvalidArgument when gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

}  // namespace rbd
