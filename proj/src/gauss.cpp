#include "rbd/gauss.hpp"

#include "rbd/error.hpp"

namespace rbd {

GaussRational GaussRational::i_pow(std::int64_t k) {
  switch (mod_floor(k, 4)) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussRational GaussRational::pow(std::int64_t k) const {
  GaussRational base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  GaussRational result(1);
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::string GaussRational::str() const {
  if (im_.sign() < 0) return re_.str() + "-" + (-im_).str() + "*i";
  return re_.str() + "+" + im_.str() + "*i";
}

GaussRational GaussRational::parse(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::InvalidArgument,
                 "malformed Gaussian rational '" + std::string(text) + "'");
  };
  if (text.size() < 2 || text.substr(text.size() - 2) != "*i") {
    // A bare rational is accepted as a real element.
    return GaussRational(Rational::parse(text));
  }
  std::string_view body = text.substr(0, text.size() - 2);
  // The separator is the last sign that is not at position 0.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) throw fail();
  Rational re = Rational::parse(body.substr(0, split));
  Rational im = Rational::parse(body.substr(split + 1));
  if (body[split] == '-') im = -im;
  return {re, im};
}

GaussRational& GaussRational::operator+=(const GaussRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& rhs) {
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& rhs) {
  return *this *= rhs.inverse();
}

}  // namespace rbd
