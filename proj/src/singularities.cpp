#include "rbd/singularities.hpp"

#include "rbd/error.hpp"
#include "rbd/symmatrix.hpp"

namespace rbd {

std::string CyclicQuotientType::str() const {
  if (is_smooth()) return "smooth";
  return "1/" + std::to_string(r) + "(1," + std::to_string(q) + ")";
}

CyclicQuotientType normalize(std::int64_t r, std::int64_t a, std::int64_t b) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "group order must be positive");
  if (r == 1) return {1, 0, 0, 0};
  CyclicQuotientType t{r, mod_floor(a, r), mod_floor(b, r), 0};
  if (gcd64(t.a, r) != 1 || gcd64(t.b, r) != 1) {
    throw Error(ErrorCode::NonIsolatedFixedLocus,
                "weights (" + std::to_string(a) + "," + std::to_string(b) +
                    ") are not both units mod " + std::to_string(r));
  }
  t.q = mod_floor(mod_inverse(t.a, r) * t.b, r);
  return t;
}

std::string to_string(TKind kind) {
  switch (kind) {
    case TKind::SmoothPoint: return "smooth";
    case TKind::RdpA: return "rdp_A";
    case TKind::TType: return "T";
    case TKind::NotClassT: return "not_class_T";
  }
  return "unknown";
}

namespace {

std::optional<TFactorization> t_factorization(std::int64_t r, std::int64_t q) {
  for (std::int64_t n = 2; n * n <= r; ++n) {
    if (r % (n * n) != 0) continue;
    const std::int64_t d = r / (n * n);
    if ((q + 1) % (d * n) != 0) continue;
    const std::int64_t a = (q + 1) / (d * n);
    if (a >= 1 && gcd64(a, n) == 1) return TFactorization{d, n, a};
  }
  return std::nullopt;
}

}  // namespace

TClassification classify_T(const CyclicQuotientType& t) {
  if (t.r > (std::int64_t{1} << 31)) {
    throw Error(ErrorCode::OutOfRange, "classification is limited to r <= 2^31");
  }
  if (t.is_smooth()) return {TKind::SmoothPoint, 0, std::nullopt};
  auto factor = t_factorization(t.r, t.q);
  if (t.q == t.r - 1) return {TKind::RdpA, t.r - 1, factor};
  if (factor) return {TKind::TType, 0, factor};
  return {TKind::NotClassT, 0, std::nullopt};
}

ResolutionData resolve(const CyclicQuotientType& t) {
  if (t.is_smooth()) throw Error(ErrorCode::SmoothInput, "nothing to resolve at a smooth point");
  HJString chain = hj_expand(t.r, t.q);
  const auto& b = chain.terms();
  // Adjunction on each exceptional (-b_i)-curve: K_resolved . E_i = b_i - 2.
  std::vector<Rational> rhs;
  rhs.reserve(b.size());
  for (std::int64_t bi : b) rhs.emplace_back(bi - 2);
  std::vector<Rational> disc = solve_symmetric(chain.intersection_matrix(), rhs);

  Rational delta_k2;
  for (std::size_t i = 0; i < b.size(); ++i) delta_k2 += disc[i] * rhs[i];
  const auto length = static_cast<std::int64_t>(b.size());
  return {std::move(chain), std::move(disc), std::move(delta_k2), length};
}

std::int64_t qg_deformation_dim(const TClassification& c) {
  if (c.kind != TKind::TType || !c.factorization) {
    throw Error(ErrorCode::NotTType, "Q-Gorenstein parameter count needs a 1/dn^2(1,dna-1) germ");
  }
  return c.factorization->d;
}

}  // namespace rbd
