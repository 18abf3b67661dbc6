#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbd/surfaces.hpp"

namespace rbd {

// C_{p,q} configurations to excise, each with p > q > 0 coprime.
class BlowdownPlan {
public:
  BlowdownPlan() = default;
  // Throws InvalidPQ.
  explicit BlowdownPlan(std::vector<std::pair<std::int64_t, std::int64_t>> configs);
  static BlowdownPlan repeated(std::int64_t p, std::int64_t q, std::size_t count);

  const std::vector<std::pair<std::int64_t, std::int64_t>>& configs() const noexcept { return configs_; }
  // Sum of chain lengths.
  std::int64_t total_length() const;

private:
  std::vector<std::pair<std::int64_t, std::int64_t>> configs_;
};

// Replace one C_{p,q} (k spheres, chi = k + 1, negative definite of rank k)
// by the rational ball B_{p,q} (chi = 1): chi -= k, sigma += k. Throws
// InsufficientNegativePart when k > b^-, ConsistencyFailure if chi_h moves.
FourManifoldInvariants blow_down(const FourManifoldInvariants& m, std::int64_t p, std::int64_t q);

FourManifoldInvariants full_blow_down(const FourManifoldInvariants& m, const BlowdownPlan& plan);

struct NoetherCheck {
  bool pass = false;
  // c1^2 - (2 chi_h - 6)
  std::int64_t margin = 0;
  // False when c1^2 <= 0 or chi_h <= 0: then no minimal surface of general
  // type has these numbers and a failure is not an obstruction.
  bool general_type_possible = false;
  std::string caveat;
};

// Throws InvalidArgument when chi_h is undefined.
NoetherCheck noether_check(const FourManifoldInvariants& m);

struct GeographyReport {
  FourManifoldInvariants invariants;
  std::optional<std::int64_t> chi_h;
  std::optional<std::int64_t> bplus;
  std::optional<std::int64_t> bminus;
  std::optional<NoetherCheck> noether;
  // Bogomolov-Miyaoka-Yau: c1^2 <= 9 chi_h; margin = 9 chi_h - c1^2.
  std::optional<bool> bmy_pass;
  std::optional<std::int64_t> bmy_margin;
  std::optional<std::int64_t> elliptic_en;
  bool consistent = true;
  std::vector<std::string> issues;
};

GeographyReport geography_report(const FourManifoldInvariants& m);

// E(4) with n copies of C_{2,1} blown down, 1 <= n <= 9. Throws OutOfRange.
FourManifoldInvariants w4n(std::int64_t n);

}  // namespace rbd
