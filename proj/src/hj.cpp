#include "rbd/hj.hpp"

#include <algorithm>

#include "rbd/error.hpp"

namespace rbd {

HJString::HJString(std::vector<std::int64_t> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw Error(ErrorCode::InvalidFraction, "empty Hirzebruch-Jung string");
  for (std::int64_t b : terms_) {
    if (b < 2) {
      throw Error(ErrorCode::InvalidFraction,
                  "Hirzebruch-Jung term " + std::to_string(b) + " is below 2");
    }
  }
}

HJString HJString::reversed() const {
  return HJString(std::vector<std::int64_t>(terms_.rbegin(), terms_.rend()));
}

SymMatrix HJString::intersection_matrix() const {
  SymMatrix m(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    m.set(i, i, Rational(-terms_[i]));
    if (i + 1 < terms_.size()) m.set(i, i + 1, Rational(1));
  }
  return m;
}

std::string HJString::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(terms_[i]);
  }
  return out + "]";
}

LensSpace::LensSpace(std::int64_t m, std::int64_t q) : m_(m), q_(0) {
  if (m < 2) throw Error(ErrorCode::InvalidFraction, "lens space order must be at least 2");
  q_ = mod_floor(q, m);
  if (gcd64(q_, m) != 1) {
    throw Error(ErrorCode::InvalidFraction,
                "L(" + std::to_string(m) + "," + std::to_string(q) + ") needs gcd(q, m) = 1");
  }
}

std::string LensSpace::str() const {
  return "L(" + std::to_string(m_) + "," + std::to_string(q_) + ")";
}

HJString hj_expand(std::int64_t m, std::int64_t q) {
  if (!(q > 0 && q < m) || gcd64(m, q) != 1) {
    throw Error(ErrorCode::InvalidFraction, std::to_string(m) + "/" + std::to_string(q) +
                                                " needs 0 < q < m and gcd(m, q) = 1");
  }
  std::vector<std::int64_t> terms;
  while (q != 0) {
    std::int64_t b = (m + q - 1) / q;
    terms.push_back(b);
    std::int64_t next = b * q - m;
    m = q;
    q = next;
  }
  return HJString(std::move(terms));
}

Rational hj_value(const HJString& s) {
  const auto& t = s.terms();
  Rational value(t.back());
  for (auto it = t.rbegin() + 1; it != t.rend(); ++it) value = Rational(*it) - value.inverse();
  return value;
}

HJString cpq_string(std::int64_t p, std::int64_t q) {
  if (!(p > q && q > 0) || gcd64(p, q) != 1) {
    throw Error(ErrorCode::InvalidPQ, "C_{" + std::to_string(p) + "," + std::to_string(q) +
                                          "} needs p > q > 0 coprime");
  }
  return hj_expand(p * p, p * q - 1);
}

LensSpace lens_of_chain(const HJString& s) {
  Rational v = hj_value(s);
  return LensSpace(v.num().convert_to<std::int64_t>(), v.den().convert_to<std::int64_t>());
}

bool lens_equivalent(const LensSpace& a, const LensSpace& b, bool allow_reversal) {
  if (a.m() != b.m()) return false;
  const std::int64_t m = a.m();
  const std::int64_t q = a.q();
  const std::int64_t q_inv = mod_inverse(q, m);
  std::vector<std::int64_t> accepted{q, q_inv};
  if (allow_reversal) {
    accepted.push_back(mod_floor(-q, m));
    accepted.push_back(mod_floor(-q_inv, m));
  }
  return std::find(accepted.begin(), accepted.end(), b.q()) != accepted.end();
}

HJString dual_string(std::int64_t m, std::int64_t q) {
  if (!(q > 0 && q < m) || gcd64(m, q) != 1) {
    throw Error(ErrorCode::InvalidFraction, std::to_string(m) + "/" + std::to_string(q) +
                                                " needs 0 < q < m and gcd(m, q) = 1");
  }
  return hj_expand(m, m - q);
}

}  // namespace rbd
