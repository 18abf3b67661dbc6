#include "rbd/rational.hpp"

#include <cctype>
#include <limits>

#include "rbd/error.hpp"

namespace rbd {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Integer g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::int64_t Rational::to_int64() const {
  if (den_ != 1 || num_ > std::numeric_limits<std::int64_t>::max() ||
      num_ < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::InvalidArgument, "value " + str() + " is not a 64-bit integer");
  }
  return num_.convert_to<std::int64_t>();
}

Rational Rational::inverse() const {
  if (num_ == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  return Rational(den_, num_);
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

namespace {

bool is_integer_token(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view n = text.substr(0, slash);
  if (!is_integer_token(n)) {
    throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(n));
  std::string_view d = text.substr(slash + 1);
  if (!is_integer_token(d)) {
    throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  }
  return Rational(parse_integer(n), parse_integer(d));
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  reduce();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  // Extended Euclid on (a mod m, m).
  std::int64_t old_r = mod_floor(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return mod_floor(old_s, m);
}

}  // namespace rbd
