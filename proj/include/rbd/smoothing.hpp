#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbd/poly.hpp"
#include "rbd/singularities.hpp"

namespace rbd {

// The family uv - y^(dn) = sum_{k<d} t_k y^(kn) with Z_n acting by
// (zeta u, zeta^-1 v, zeta^a y). Its central fiber is 1/dn^2(1, dna - 1).
struct TFamilySpec {
  std::int64_t d;
  std::int64_t n;
  std::int64_t a;
  std::vector<Rational> t;

  // Throws InvalidArgument unless d > 0, n >= 2, a >= 1, gcd(a, n) = 1 and
  // t has d entries.
  TFamilySpec(std::int64_t d, std::int64_t n, std::int64_t a, std::vector<Rational> t);

  // y^(dn) + sum t_k y^(kn).
  RationalPoly fiber_polynomial() const;
};

bool action_preserves(const TFamilySpec& spec);
// uv = p(y) is smooth iff p is squarefree.
bool fiber_smooth(const TFamilySpec& spec);
// No nontrivial element fixes a point of the fiber.
bool action_free(const TFamilySpec& spec);

// Comparison of the resolution string with the C_{p,q} chain for one
// reading of (n, a) as (p, q).
struct CpqCrossReference {
  std::string convention;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::vector<std::int64_t> cpq;
  bool matches = false;
  bool reversed = false;
};

struct SmoothingReport {
  CyclicQuotientType type;
  TClassification classification;
  ResolutionData resolution;
  std::string fiber_polynomial;
  bool preserves = false;
  bool smooth = false;
  bool free = false;
  std::int64_t k = 0;  // length of the resolution string
  // Blow-down deltas chi -> chi - k, sigma -> sigma + k; only for d = 1.
  std::optional<std::int64_t> delta_chi;
  std::optional<std::int64_t> delta_sigma;
  std::vector<CpqCrossReference> cpq;  // d = 1 only
};

SmoothingReport smoothing_report(const TFamilySpec& spec);

}  // namespace rbd
