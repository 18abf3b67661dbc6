#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbd/hj.hpp"
#include "rbd/rational.hpp"

namespace rbd {

// Germ C^2 / Z_r with generator (z1, z2) -> (zeta^a z1, zeta^b z2), together
// with its normal form 1/r(1, q). The smooth point has r = 1 and q = 0.
struct CyclicQuotientType {
  std::int64_t r = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t q = 0;

  bool is_smooth() const noexcept { return r == 1; }
  // "1/r(1,q)"
  std::string str() const;

  friend bool operator==(const CyclicQuotientType&, const CyclicQuotientType&) = default;
};

// Weights are taken mod r. Throws NonIsolatedFixedLocus when a weight shares a
// factor with r, InvalidArgument when r < 1.
CyclicQuotientType normalize(std::int64_t r, std::int64_t a, std::int64_t b);

// r = d n^2, q = d n a - 1 with d > 0, n >= 2, gcd(a, n) = 1.
struct TFactorization {
  std::int64_t d = 0;
  std::int64_t n = 0;
  std::int64_t a = 0;

  friend bool operator==(const TFactorization&, const TFactorization&) = default;
};

enum class TKind { SmoothPoint, RdpA, TType, NotClassT };

std::string to_string(TKind kind);

struct TClassification {
  TKind kind = TKind::NotClassT;
  // k of A_k, set when kind == RdpA.
  std::int64_t rdp_index = 0;
  // Set for TType; for RdpA it is an annotation present only if the germ
  // also admits a T factorization.
  std::optional<TFactorization> factorization;

  bool is_class_t() const noexcept { return kind == TKind::RdpA || kind == TKind::TType; }
  friend bool operator==(const TClassification&, const TClassification&) = default;
};

// Divisor search over n^2 | r; r is limited to 2^31.
TClassification classify_T(const CyclicQuotientType& t);

struct ResolutionData {
  HJString string;
  // Coefficients a_i in K_resolved = pullback K + sum a_i E_i; -1 < a_i <= 0.
  std::vector<Rational> discrepancies;
  Rational delta_K2;
  std::int64_t delta_chi = 0;
};

// Minimal resolution chain hj_expand(r, q) and its local invariants. Throws
// SmoothInput for r = 1.
ResolutionData resolve(const CyclicQuotientType& t);

// Number of Q-Gorenstein smoothing parameters; throws NotTType.
std::int64_t qg_deformation_dim(const TClassification& c);

}  // namespace rbd
