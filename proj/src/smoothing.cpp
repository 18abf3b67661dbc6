#include "rbd/smoothing.hpp"

#include "rbd/error.hpp"
#include "rbd/hj.hpp"

namespace rbd {

TFamilySpec::TFamilySpec(std::int64_t d_, std::int64_t n_, std::int64_t a_, std::vector<Rational> t_)
    : d(d_), n(n_), a(a_), t(std::move(t_)) {
  if (d <= 0) throw Error(ErrorCode::InvalidArgument, "d must be positive");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  if (a < 1) throw Error(ErrorCode::InvalidArgument, "a must be positive");
  if (gcd64(a, n) != 1) throw Error(ErrorCode::InvalidArgument, "gcd(a, n) must be 1");
  if (static_cast<std::int64_t>(t.size()) != d) {
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(d) + " parameters t_k, got " + std::to_string(t.size()));
  }
  if (d * n > 4096) throw Error(ErrorCode::OutOfRange, "dn too large");
}

RationalPoly TFamilySpec::fiber_polynomial() const {
  std::vector<Rational> c(static_cast<std::size_t>(d * n + 1));
  c.back() = 1;
  for (std::int64_t k = 0; k < d; ++k) c[static_cast<std::size_t>(k * n)] += t[static_cast<std::size_t>(k)];
  return RationalPoly(std::move(c));
}

bool action_preserves(const TFamilySpec& spec) {
  const std::int64_t n = spec.n;
  const std::int64_t lhs = mod_floor(1 + (n - 1), n);  // uv
  if (mod_floor(spec.a * spec.d * n, n) != lhs) return false;
  for (std::int64_t k = 0; k < spec.d; ++k) {
    if (mod_floor(spec.a * k * n, n) != lhs) return false;
  }
  return true;
}

bool fiber_smooth(const TFamilySpec& spec) { return squarefree(spec.fiber_polynomial()); }

bool action_free(const TFamilySpec& spec) {
  // g^j fixes (u, v, y) only if u = v = 0 and (a j = 0 mod n or y = 0).
  for (std::int64_t j = 1; j < spec.n; ++j) {
    if (mod_floor(spec.a * j, spec.n) == 0) return false;
  }
  return !spec.t.front().is_zero();
}

SmoothingReport smoothing_report(const TFamilySpec& spec) {
  const std::int64_t m = spec.d * spec.n * spec.n;
  const CyclicQuotientType type = normalize(m, 1, spec.d * spec.n * spec.a - 1);
  SmoothingReport r{.type = type, .classification = classify_T(type), .resolution = resolve(type)};
  r.fiber_polynomial = spec.fiber_polynomial().str();
  r.preserves = action_preserves(spec);
  r.smooth = fiber_smooth(spec);
  r.free = action_free(spec);
  r.k = static_cast<std::int64_t>(r.resolution.string.length());
  if (spec.d != 1) return r;

  r.delta_chi = -r.k;
  r.delta_sigma = r.k;
  const auto& terms = r.resolution.string.terms();
  auto check = [&](std::string convention, std::int64_t p, std::int64_t q) {
    CpqCrossReference x{std::move(convention), p, q, {}, false, false};
    const HJString chain = cpq_string(p, q);
    x.cpq = chain.terms();
    if (chain.terms() == terms) {
      x.matches = true;
    } else if (chain.reversed().terms() == terms) {
      x.matches = true;
      x.reversed = true;
    }
    r.cpq.push_back(std::move(x));
  };
  const std::int64_t a = mod_floor(spec.a, spec.n);
  check("p=n,q=a", spec.n, a);
  check("p=n,q=n-a", spec.n, spec.n - a);
  return r;
}

}  // namespace rbd
