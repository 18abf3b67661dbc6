#include "rbd/surfaces.hpp"

#include "rbd/error.hpp"

namespace rbd {

namespace {

void same_surface(const HirzebruchClass& x, const HirzebruchClass& y) {
  if (x.e != y.e) {
    throw Error(ErrorCode::MixedSurfaces,
                "classes on Sigma_" + std::to_string(x.e) + " and Sigma_" + std::to_string(y.e));
  }
}

}  // namespace

HirzebruchClass HirzebruchClass::operator+(const HirzebruchClass& o) const {
  same_surface(*this, o);
  return {e, a + o.a, b + o.b};
}

std::string HirzebruchClass::str() const {
  if (a == 0 && b == 0) return "0";
  auto term = [](std::int64_t c, const char* name) {
    if (c == 1) return std::string(name);
    if (c == -1) return "-" + std::string(name);
    return std::to_string(c) + name;
  };
  std::string out;
  if (a != 0) out = term(a, "C0");
  if (b != 0) out += (b > 0 && !out.empty() ? "+" : "") + term(b, "f");
  return out;
}

FourManifoldInvariants::FourManifoldInvariants(std::int64_t chi, std::int64_t sigma, std::int64_t b1)
    : chi_(chi), sigma_(sigma), b1_(b1) {
  if (b1 < 0) throw Error(ErrorCode::InvalidArgument, "b1 must be nonnegative");
}

std::optional<std::int64_t> FourManifoldInvariants::chi_h() const {
  if (b1_ != 0 || (chi_ + sigma_) % 4 != 0) return std::nullopt;
  return (chi_ + sigma_) / 4;
}

std::optional<std::int64_t> FourManifoldInvariants::bplus() const {
  if ((b2() + sigma_) % 2 != 0) return std::nullopt;
  return (b2() + sigma_) / 2;
}

std::optional<std::int64_t> FourManifoldInvariants::bminus() const {
  if ((b2() - sigma_) % 2 != 0) return std::nullopt;
  return (b2() - sigma_) / 2;
}

bool FourManifoldInvariants::noether_identity_holds() const {
  auto h = chi_h();
  return h && c1sq() + chi_ == 12 * *h;
}

FourManifoldInvariants hirzebruch_invariants(std::int64_t e) {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "Sigma_e needs e >= 0");
  return {4, 0, 0};
}

HirzebruchClass canonical_class(std::int64_t e) {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "Sigma_e needs e >= 0");
  return {e, -2, -(e + 2)};
}

std::int64_t intersect(const HirzebruchClass& x, const HirzebruchClass& y) {
  same_surface(x, y);
  return -x.e * x.a * y.a + x.a * y.b + y.a * x.b;
}

bool is_effective(const HirzebruchClass& x) { return x.a >= 0 && x.b >= 0; }

std::int64_t genus_smooth_member(const HirzebruchClass& x) {
  if (!is_effective(x)) throw Error(ErrorCode::InvalidArgument, x.str() + " is not effective");
  const std::int64_t twice = intersect(x, x) + intersect(x, canonical_class(x.e));
  if (twice % 2 != 0) throw Error(ErrorCode::NonIntegralGenus, "x^2 + x.K is odd for " + x.str());
  const std::int64_t g = 1 + twice / 2;
  if (g < 0) {
    throw Error(ErrorCode::InvalidArgument,
                x.str() + " has arithmetic genus " + std::to_string(g) + "; no connected smooth member");
  }
  return g;
}

std::int64_t genus_bidegree(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::InvalidArgument, "bidegree entries must be >= 1");
  return (a - 1) * (b - 1);
}

DoubleCoverResult double_cover(const FourManifoldInvariants& base, const HirzebruchClass& half_branch) {
  const HirzebruchClass& L = half_branch;
  const HirzebruchClass branch = L * 2;
  if (!is_effective(branch)) {
    throw Error(ErrorCode::IneffectiveBranch, "branch class " + branch.str() + " is not effective");
  }
  auto base_h = base.chi_h();
  if (!base_h) throw Error(ErrorCode::InvalidArgument, "base surface has no chi_h");
  const HirzebruchClass K = canonical_class(L.e);

  const std::int64_t branch_euler = -(intersect(branch, branch) + intersect(branch, K));
  const std::int64_t chi = 2 * base.chi() - branch_euler;
  const HirzebruchClass KL = K + L;
  const std::int64_t c1sq = 2 * intersect(KL, KL);
  const std::int64_t twice_delta = intersect(L, L) + intersect(L, K);
  if (twice_delta % 2 != 0) throw Error(ErrorCode::NonIntegralGenus, "L^2 + L.K is odd");
  const std::int64_t chi_h = 2 * *base_h + twice_delta / 2;

  // Signature from the Noether formula, then checked against chi_h.
  if ((c1sq - 2 * chi) % 3 != 0) {
    throw Error(ErrorCode::ConsistencyFailure, "c1^2 - 2 chi is not divisible by 3");
  }
  FourManifoldInvariants inv(chi, (c1sq - 2 * chi) / 3, 0);
  if (inv.chi_h() != chi_h || inv.c1sq() != c1sq) {
    throw Error(ErrorCode::ConsistencyFailure, "double cover invariants violate c1^2 + chi = 12 chi_h");
  }
  return {inv, branch, branch_euler, c1sq, chi_h, L.a == 0 && L.b == 0};
}

SplitPreimage split_preimage(const HirzebruchClass& d, const HirzebruchClass& branch) {
  const std::int64_t meet = intersect(d, branch);
  if (meet != 0) {
    throw Error(ErrorCode::MeetsBranch, d.str() + " meets the branch curve in " +
                                            std::to_string(meet) + " points");
  }
  // (pullback d)^2 = 2 d^2 splits evenly over two disjoint isomorphic sheets.
  return {2, intersect(d, d)};
}

HirzebruchClass det_twisted_cotangent(std::int64_t e, const HirzebruchClass& d) {
  return canonical_class(e) + d * 2;
}

std::optional<std::int64_t> recognize_en(const FourManifoldInvariants& m) {
  if (m.b1() != 0 || m.chi() <= 0 || m.chi() % 12 != 0) return std::nullopt;
  const std::int64_t n = m.chi() / 12;
  if (m.sigma() != -8 * n || m.c1sq() != 0 || m.chi_h() != n) return std::nullopt;
  return n;
}

}  // namespace rbd
