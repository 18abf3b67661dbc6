#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace rbd {

// Class a*C0 + b*f on the Hirzebruch surface Sigma_e (C0^2 = -e, C0.f = 1,
// f^2 = 0). Sigma_0 is P1 x P1 with (a, b) the bidegree.
struct HirzebruchClass {
  std::int64_t e = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  HirzebruchClass operator+(const HirzebruchClass& o) const;
  HirzebruchClass operator*(std::int64_t k) const { return {e, a * k, b * k}; }
  std::string str() const;

  friend bool operator==(const HirzebruchClass&, const HirzebruchClass&) = default;
};

// Topological invariants of a closed oriented 4-manifold, with the complex
// surface quantities derived from them.
class FourManifoldInvariants {
public:
  // Throws InvalidArgument when b1 < 0.
  FourManifoldInvariants(std::int64_t chi, std::int64_t sigma, std::int64_t b1 = 0);

  std::int64_t chi() const noexcept { return chi_; }
  std::int64_t sigma() const noexcept { return sigma_; }
  std::int64_t b1() const noexcept { return b1_; }

  // c1^2 = 2 chi + 3 sigma
  std::int64_t c1sq() const noexcept { return 2 * chi_ + 3 * sigma_; }
  // (chi + sigma)/4 when b1 = 0 and the quotient is integral.
  std::optional<std::int64_t> chi_h() const;
  std::int64_t b2() const noexcept { return chi_ - 2 + 2 * b1_; }
  // (b2 +- sigma)/2 when integral.
  std::optional<std::int64_t> bplus() const;
  std::optional<std::int64_t> bminus() const;
  // c1^2 + chi == 12 chi_h; false when chi_h is undefined.
  bool noether_identity_holds() const;
  // b1 = 0 is recorded as an input assumption, never proved.
  bool b1_assumed() const noexcept { return b1_ == 0; }

  friend bool operator==(const FourManifoldInvariants&, const FourManifoldInvariants&) = default;

private:
  std::int64_t chi_;
  std::int64_t sigma_;
  std::int64_t b1_;
};

// Sigma_e: chi = 4, sigma = 0.
FourManifoldInvariants hirzebruch_invariants(std::int64_t e);

HirzebruchClass canonical_class(std::int64_t e);
// Throws MixedSurfaces when the classes live on different Sigma_e.
std::int64_t intersect(const HirzebruchClass& x, const HirzebruchClass& y);
bool is_effective(const HirzebruchClass& x);
// 1 + (x^2 + x.K)/2. Throws NonIntegralGenus on odd x^2 + x.K and
// InvalidArgument for ineffective or negative-genus classes.
std::int64_t genus_smooth_member(const HirzebruchClass& x);
// Bidegree (a, b) curve on P1 x P1: (a-1)(b-1). Requires a, b >= 1.
std::int64_t genus_bidegree(std::int64_t a, std::int64_t b);

struct DoubleCoverResult {
  FourManifoldInvariants invariants;
  HirzebruchClass branch;
  // chi(B) = -(B^2 + B.K), valid for disconnected members too.
  std::int64_t branch_euler = 0;
  std::int64_t c1sq = 0;
  std::int64_t chi_h = 0;
  // L = 0: the cover is two disjoint copies of the base.
  bool disconnected = false;
};

// Double cover of base branched along B in |2L|. Throws IneffectiveBranch.
DoubleCoverResult double_cover(const FourManifoldInvariants& base, const HirzebruchClass& half_branch);

struct SplitPreimage {
  int components = 2;
  std::int64_t each_selfint = 0;
};

// Preimage of d under a double cover branched along B disjoint from d. Throws
// MeetsBranch when d.B != 0.
SplitPreimage split_preimage(const HirzebruchClass& d, const HirzebruchClass& branch);

// First Chern class of (Omega^1 (x) O(d)): K + 2d.
HirzebruchClass det_twisted_cotangent(std::int64_t e, const HirzebruchClass& d);

// n when the invariants are those of E(n): chi = 12n, sigma = -8n.
std::optional<std::int64_t> recognize_en(const FourManifoldInvariants& m);

}  // namespace rbd
