#include "rbd/quotients.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rbd/error.hpp"

namespace rbd {

// ---------------------------------------------------------------------------
// Points and curves

namespace {

std::array<GaussRational, 2> normalize_pair(const std::array<GaussRational, 2>& c) {
  if (!c[0].is_zero()) return {GaussRational(1), c[1] / c[0]};
  if (c[1].is_zero()) throw Error(ErrorCode::InvalidArgument, "[0:0] is not a projective point");
  return {GaussRational(0), GaussRational(1)};
}

// Short form of a coordinate or coefficient: "1", "-1/2", "i", "-2*i", "1+i".
std::string short_str(const GaussRational& x) {
  if (x.is_real()) return x.re().str();
  std::string im;
  if (x.im() == Rational(1)) {
    im = "i";
  } else if (x.im() == Rational(-1)) {
    im = "-i";
  } else {
    im = x.im().str() + "*i";
  }
  if (x.re().is_zero()) return im;
  return x.re().str() + (im.front() == '-' ? "" : "+") + im;
}

std::string pair_str(const std::array<GaussRational, 2>& c) {
  return "[" + short_str(c[0]) + ":" + short_str(c[1]) + "]";
}

}  // namespace

BiProjPoint BiProjPoint::make(std::array<GaussRational, 2> z, std::array<GaussRational, 2> w) {
  return {normalize_pair(z), normalize_pair(w)};
}

std::string BiProjPoint::str() const { return "(" + pair_str(z) + "," + pair_str(w) + ")"; }

BiProjCurve::BiProjCurve(int d1, int d2, std::vector<BiProjTerm> terms) : d1_(d1), d2_(d2) {
  if (d1 < 0 || d2 < 0) throw Error(ErrorCode::InvalidArgument, "negative bidegree");
  std::map<std::pair<int, int>, GaussRational> merged;
  for (const auto& t : terms) {
    if (t.z0_exp < 0 || t.z0_exp > d1 || t.w0_exp < 0 || t.w0_exp > d2) {
      throw Error(ErrorCode::InvalidArgument, "monomial exponent outside the bidegree");
    }
    merged[{t.z0_exp, t.w0_exp}] += t.coefficient;
  }
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    if (!it->second.is_zero()) terms_.push_back({it->first.first, it->first.second, it->second});
  }
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "the zero form defines no curve");
}

BiProjCurve BiProjCurve::paper_curve() {
  return BiProjCurve(4, 2, {{4, 2, GaussRational(1)},
                            {4, 0, GaussRational(1)},
                            {0, 2, GaussRational(1)},
                            {0, 0, GaussRational(-1)}});
}

BiProjCurve BiProjCurve::ck_curve(int k) {
  if (k < 1 || k > 4) throw Error(ErrorCode::OutOfRange, "explicit C_k curves exist for 1 <= k <= 4");
  const std::array<GaussRational, 4> f_roots{GaussRational(0, 1), GaussRational(0, -1),
                                              GaussRational(0, 2), GaussRational(0, -2)};
  const std::array<GaussRational, 4> g_roots{GaussRational(1), GaussRational(-1), GaussRational(2),
                                              GaussRational(-2)};
  // Products of (w0 - r w1) in the affine coordinate w0 (w1 = 1).
  auto product = [k](const std::array<GaussRational, 4>& roots) {
    GaussPoly p{GaussRational(1)};
    for (int j = 0; j < k; ++j) p = p * GaussPoly{-roots[static_cast<std::size_t>(j)], GaussRational(1)};
    return p;
  };
  std::vector<BiProjTerm> terms;
  const GaussPoly f = product(f_roots);
  const GaussPoly g = product(g_roots);
  for (int j = 0; j <= k; ++j) {
    terms.push_back({4, j, f.coefficient(static_cast<std::size_t>(j))});
    terms.push_back({0, j, g.coefficient(static_cast<std::size_t>(j))});
  }
  return BiProjCurve(4, k, std::move(terms));
}

namespace {

// coefficient * x^e for a possibly negative exponent (derivative of x^0).
GaussRational power(const GaussRational& x, int e) {
  return e < 0 ? GaussRational(0) : x.pow(e);
}

}  // namespace

GaussRational BiProjCurve::operator()(const BiProjPoint& p) const {
  GaussRational acc;
  for (const auto& t : terms_) {
    acc += t.coefficient * power(p.z[0], t.z0_exp) * power(p.z[1], d1_ - t.z0_exp) *
           power(p.w[0], t.w0_exp) * power(p.w[1], d2_ - t.w0_exp);
  }
  return acc;
}

std::array<GaussRational, 4> BiProjCurve::gradient(const BiProjPoint& p) const {
  std::array<GaussRational, 4> g;
  for (const auto& t : terms_) {
    const int ez0 = t.z0_exp, ez1 = d1_ - t.z0_exp, ew0 = t.w0_exp, ew1 = d2_ - t.w0_exp;
    const GaussRational z0 = power(p.z[0], ez0), z1 = power(p.z[1], ez1);
    const GaussRational w0 = power(p.w[0], ew0), w1 = power(p.w[1], ew1);
    g[0] += t.coefficient * GaussRational(ez0) * power(p.z[0], ez0 - 1) * z1 * w0 * w1;
    g[1] += t.coefficient * GaussRational(ez1) * z0 * power(p.z[1], ez1 - 1) * w0 * w1;
    g[2] += t.coefficient * GaussRational(ew0) * z0 * z1 * power(p.w[0], ew0 - 1) * w1;
    g[3] += t.coefficient * GaussRational(ew1) * z0 * z1 * w0 * power(p.w[1], ew1 - 1);
  }
  return g;
}

GaussPoly BiProjCurve::restrict_to_fiber(const std::array<GaussRational, 2>& z_fixed) const {
  std::vector<GaussRational> coeffs(static_cast<std::size_t>(d2_) + 1);
  for (const auto& t : terms_) {
    coeffs[static_cast<std::size_t>(d2_ - t.w0_exp)] +=
        t.coefficient * power(z_fixed[0], t.z0_exp) * power(z_fixed[1], d1_ - t.z0_exp);
  }
  return GaussPoly(std::move(coeffs));
}

std::string BiProjCurve::str() const {
  auto mono = [](const char* var, int e) -> std::string {
    if (e == 0) return "";
    return std::string(var) + (e == 1 ? "" : "^" + std::to_string(e));
  };
  std::string out;
  for (const auto& t : terms_) {
    std::string m;
    for (auto part : {mono("z0", t.z0_exp), mono("z1", d1_ - t.z0_exp), mono("w0", t.w0_exp),
                      mono("w1", d2_ - t.w0_exp)}) {
      if (part.empty()) continue;
      if (!m.empty()) m += "*";
      m += part;
    }
    const GaussRational& k = t.coefficient;
    const bool negative = k.is_real() ? k.re().sign() < 0 : k.re().is_zero() && k.im().sign() < 0;
    std::string c = short_str(negative ? -k : k);
    if (!k.is_real() && !k.re().is_zero()) c = "(" + c + ")";
    std::string term = m.empty() ? c : c == "1" ? m : c + "*" + m;
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Roots over Q(i)

namespace {

bool is_gaussian_integer(const GaussRational& x) { return x.re().is_integer() && x.im().is_integer(); }

bool gaussian_divides(const GaussRational& d, const GaussRational& c) {
  return is_gaussian_integer(c / d);
}

// Gaussian primes dividing the Gaussian integer c, with exponents.
std::vector<std::pair<GaussRational, int>> gaussian_factor(GaussRational c) {
  const Integer norm = c.norm().num();
  if (norm > Integer(100'000'000'000'000LL)) {
    throw Error(ErrorCode::IrreducibleFactor, "coefficients too large for exact root search");
  }
  auto n = norm.convert_to<std::uint64_t>();
  std::vector<std::uint64_t> rational_primes;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    rational_primes.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) rational_primes.push_back(n);

  std::vector<std::pair<GaussRational, int>> out;
  for (std::uint64_t p : rational_primes) {
    std::vector<GaussRational> candidates;
    if (p == 2) {
      candidates.emplace_back(Rational(1), Rational(1));
    } else if (p % 4 == 3) {
      candidates.emplace_back(Rational(static_cast<std::int64_t>(p)));
    } else {
      for (std::uint64_t x = 1; x * x < p; ++x) {
        const std::uint64_t rest = p - x * x;
        auto y = static_cast<std::uint64_t>(boost::multiprecision::sqrt(Integer(rest)));
        if (y * y == rest) {
          candidates.emplace_back(Rational(static_cast<std::int64_t>(x)),
                                  Rational(static_cast<std::int64_t>(y)));
          candidates.emplace_back(Rational(static_cast<std::int64_t>(x)),
                                  Rational(-static_cast<std::int64_t>(y)));
          break;
        }
      }
    }
    for (const auto& pi : candidates) {
      int e = 0;
      while (gaussian_divides(pi, c)) {
        c /= pi;
        ++e;
      }
      if (e > 0) out.emplace_back(pi, e);
    }
  }
  return out;
}

// All divisors of c up to units.
std::vector<GaussRational> gaussian_divisors(const GaussRational& c) {
  std::vector<GaussRational> divisors{GaussRational(1)};
  for (const auto& [pi, e] : gaussian_factor(c)) {
    std::vector<GaussRational> next;
    for (const auto& d : divisors) {
      GaussRational acc = d;
      for (int k = 0; k <= e; ++k) {
        next.push_back(acc);
        acc *= pi;
      }
    }
    divisors = std::move(next);
  }
  return divisors;
}

std::optional<GaussRational> find_root(const GaussPoly& h) {
  if (h.degree() == 1) return -h.coefficient(0) / h.coefficient(1);
  // Scale to Gaussian integer coefficients.
  Integer common = 1;
  for (const auto& c : h.coefficients()) {
    common = boost::multiprecision::lcm(common, c.re().den());
    common = boost::multiprecision::lcm(common, c.im().den());
  }
  const GaussRational scale{Rational(common)};
  const GaussRational c0 = h.coefficient(0) * scale;
  const GaussRational cl = h.leading() * scale;
  const std::array<GaussRational, 4> units{GaussRational(1), GaussRational(-1), GaussRational::i(),
                                           -GaussRational::i()};
  const auto numerators = gaussian_divisors(c0);
  const auto denominators = gaussian_divisors(cl);
  for (const auto& v : denominators) {
    for (const auto& u : numerators) {
      for (const auto& unit : units) {
        GaussRational candidate = unit * u / v;
        if (h(candidate).is_zero()) return candidate;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<GaussRational> gaussian_roots(const GaussPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root search on the zero polynomial");
  std::vector<GaussRational> roots;
  GaussPoly h = p;
  const GaussPoly y{GaussRational(0), GaussRational(1)};
  while (h.degree() > 0 && h.coefficient(0).is_zero()) {
    roots.emplace_back(0);
    h = h.divmod(y).first;
  }
  while (h.degree() > 0) {
    auto root = find_root(h);
    if (!root) {
      throw Error(ErrorCode::IrreducibleFactor, "factor " + h.str() + " has no root in Q(i)");
    }
    roots.push_back(*root);
    h = h.divmod(GaussPoly{-*root, GaussRational(1)}).first;
  }
  return roots;
}

// ---------------------------------------------------------------------------
// Fixed points

namespace {

void require_gaussian_order(std::int64_t n) {
  if (n != 1 && n != 2 && n != 4) {
    throw Error(ErrorCode::InvalidArgument, "group order must divide 4 to stay inside Q(i)");
  }
}

}  // namespace

std::vector<FixedPointDatum> fixed_points(const BiProjCurve& c, std::int64_t n) {
  if (n != 2 && n != 4) throw Error(ErrorCode::InvalidArgument, "fixed point search supports n = 2, 4");
  const std::int64_t residue = mod_floor(c.terms().front().z0_exp, n);
  for (const auto& t : c.terms()) {
    if (mod_floor(t.z0_exp, n) != residue) {
      throw Error(ErrorCode::InvalidArgument, "curve is not invariant under z0 -> zeta z0");
    }
  }

  struct Locus {
    std::array<GaussRational, 2> z;
    std::int64_t weight;
  };
  // Affine coordinate z0/z1 at [0:1] picks up zeta; z1/z0 at [1:0] picks up zeta^-1.
  const std::array<Locus, 2> loci{Locus{{GaussRational(0), GaussRational(1)}, 1},
                                  Locus{{GaussRational(1), GaussRational(0)}, n - 1}};
  std::vector<FixedPointDatum> out;
  for (const auto& locus : loci) {
    const GaussPoly g = c.restrict_to_fiber(locus.z);
    if (g.is_zero()) {
      throw Error(ErrorCode::NonIsolatedFixedLocus, "the fixed fiber z = " + pair_str(locus.z) +
                                                        " is a component of the curve");
    }
    std::vector<BiProjPoint> points;
    std::vector<GaussRational> roots = gaussian_roots(g);
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
      return std::pair(a.re(), a.im()) > std::pair(b.re(), b.im());
    });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const auto& s : roots) points.push_back(BiProjPoint::make(locus.z, {GaussRational(1), s}));
    if (g.degree() < c.d2()) points.push_back(BiProjPoint::make(locus.z, {GaussRational(0), GaussRational(1)}));

    for (const auto& pt : points) {
      if (!c(pt).is_zero()) throw Error(ErrorCode::ConsistencyFailure, pt.str() + " is not on the curve");
      const auto grad = c.gradient(pt);
      const bool w_part = !grad[2].is_zero() || !grad[3].is_zero();
      const bool z_part = !grad[0].is_zero() || !grad[1].is_zero();
      if (!w_part && !z_part) throw Error(ErrorCode::SingularPoint, "curve is singular at " + pt.str());
      if (!w_part) {
        // The tangent line is the fixed fiber itself.
        throw Error(ErrorCode::NonIsolatedFixedLocus, "curve is tangent to the fixed fiber at " + pt.str());
      }
      out.push_back({pt, locus.weight});
    }
  }
  return out;
}

bool riemann_hurwitz_check(std::int64_t genus, std::int64_t group_order, std::int64_t quotient_genus,
                           const std::vector<std::int64_t>& stabilizer_orders) {
  if (group_order < 1) throw Error(ErrorCode::InvalidArgument, "group order must be positive");
  std::int64_t ramification = 0;
  for (std::int64_t e : stabilizer_orders) {
    if (e < 1 || group_order % e != 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "stabilizer order " + std::to_string(e) + " does not divide " + std::to_string(group_order));
    }
    ramification += e - 1;
  }
  return 2 - 2 * genus == group_order * (2 - 2 * quotient_genus) - ramification;
}

// ---------------------------------------------------------------------------
// Inventories and fixed point formulas

QuotientInventory product_inventory(const std::vector<std::int64_t>& weights1, std::int64_t genus1,
                                    const std::vector<std::int64_t>& weights2, std::int64_t genus2,
                                    std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "group order must be at least 2");
  QuotientInventory inv;
  inv.group_order = n;
  inv.cover_chi = (2 - 2 * genus1) * (2 - 2 * genus2);
  inv.cover_k2 = 8 * (genus1 - 1) * (genus2 - 1);
  inv.cover_chi_o = (1 - genus1) * (1 - genus2);

  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> counts;
  for (std::int64_t a : weights1) {
    for (std::int64_t b : weights2) {
      const CyclicQuotientType t = normalize(n, a, b);
      ++counts[{t.r, t.q}];
      inv.point_weights.emplace_back(mod_floor(a, n), mod_floor(b, n));
    }
  }
  for (const auto& [rq, mult] : counts) {
    inv.types.emplace_back(CyclicQuotientType{rq.first, 1, rq.second, rq.second}, mult);
  }
  if (!inv.point_weights.empty()) {
    for (std::int64_t j = 1; j < n; ++j) {
      ElementFixedData e{j, {}};
      for (const auto& [a, b] : inv.point_weights) e.weights.emplace_back(mod_floor(j * a, n), mod_floor(j * b, n));
      inv.elements.push_back(std::move(e));
    }
  }
  return inv;
}

QuotientInventory product_inventory(const std::vector<FixedPointDatum>& points, std::int64_t genus,
                                    std::int64_t n) {
  std::vector<std::int64_t> weights;
  for (const auto& p : points) weights.push_back(p.tangent_weight);
  return product_inventory(weights, genus, weights, genus, n);
}

std::int64_t burnside_euler(std::int64_t chi_cover, std::int64_t group_order,
                            const std::vector<std::int64_t>& fixed_counts) {
  if (group_order < 1 || static_cast<std::int64_t>(fixed_counts.size()) != group_order - 1) {
    throw Error(ErrorCode::InvalidArgument, "need one fixed point count per nontrivial element");
  }
  std::int64_t total = chi_cover;
  for (std::int64_t c : fixed_counts) total += c;
  if (total % group_order != 0) {
    throw Error(ErrorCode::NonIntegerResult, "Euler number " + Rational(total, group_order).str() +
                                                 " is not an integer");
  }
  return total / group_order;
}

LefschetzResult holomorphic_lefschetz(std::int64_t chi_o_cover, std::int64_t group_order,
                                      const std::vector<ElementFixedData>& elements) {
  require_gaussian_order(group_order);
  const std::int64_t n = group_order;
  auto zeta_pow = [n](std::int64_t w) { return GaussRational::i_pow(w * (4 / n)); };

  LefschetzResult out;
  out.total = GaussRational(chi_o_cover);
  for (const auto& element : elements) {
    if (mod_floor(element.exponent, n) == 0) {
      throw Error(ErrorCode::InvalidArgument, "fixed data listed for the identity element");
    }
    const std::int64_t order = n / gcd64(element.exponent, n);
    GaussRational contribution;
    for (const auto& [a, b] : element.weights) {
      for (std::int64_t w : {a, b}) {
        const std::int64_t r = mod_floor(w, n);
        if (r == 0 || n / gcd64(r, n) != order) {
          throw Error(ErrorCode::InvalidArgument,
                      "weight " + std::to_string(w) + " is not a unit for an element of order " +
                          std::to_string(order));
        }
      }
      contribution += ((GaussRational(1) - zeta_pow(a)) * (GaussRational(1) - zeta_pow(b))).inverse();
    }
    out.contributions.push_back(contribution);
    out.total += contribution;
  }
  const GaussRational value = out.total / GaussRational(n);
  if (!value.is_real() || !value.re().is_integer()) {
    throw Error(ErrorCode::NonIntegralLefschetz, "chi(O) evaluates to " + value.str());
  }
  out.chi_o = value.re().to_int64();
  return out;
}

QuotientResolution resolve_quotient(const QuotientInventory& inv, const LocalResolver& local) {
  QuotientResolution out;
  for (const auto& [type, mult] : inv.types) {
    TClassification cls = classify_T(type);
    if (!cls.is_class_t()) throw Error(ErrorCode::NotClassT, type.str() + " is not of class T");
    ResolutionData res = local(type);
    out.delta_chi += mult * res.delta_chi;
    out.delta_k2 += Rational(mult) * res.delta_K2;
    out.local.push_back({type, mult, std::move(cls), std::move(res)});
  }

  std::vector<std::int64_t> counts(static_cast<std::size_t>(inv.group_order - 1), 0);
  for (const auto& e : inv.elements) {
    counts.at(static_cast<std::size_t>(mod_floor(e.exponent, inv.group_order) - 1)) +=
        static_cast<std::int64_t>(e.weights.size());
  }
  out.chi_quotient = burnside_euler(inv.cover_chi, inv.group_order, counts);
  out.k2_quotient = Rational(inv.cover_k2, inv.group_order);
  out.chi = out.chi_quotient + out.delta_chi;

  const Rational c1sq = out.k2_quotient + out.delta_k2;
  if (!c1sq.is_integer()) {
    throw Error(ErrorCode::ConsistencyFailure, "resolved K^2 = " + c1sq.str() + " is not an integer");
  }
  out.c1sq = c1sq.to_int64();

  out.lefschetz = holomorphic_lefschetz(inv.cover_chi_o, inv.group_order, inv.elements);
  out.sigma_lefschetz = out.c1sq - 8 * out.lefschetz.chi_o;
  if ((out.c1sq - 2 * out.chi) % 3 != 0) {
    throw Error(ErrorCode::ConsistencyFailure,
                "c1^2 - 2 chi = " + std::to_string(out.c1sq - 2 * out.chi) + " is not divisible by 3");
  }
  out.sigma_noether = (out.c1sq - 2 * out.chi) / 3;
  if (out.sigma_lefschetz != out.sigma_noether) {
    throw Error(ErrorCode::ConsistencyFailure,
                "signature routes disagree: " + std::to_string(out.sigma_lefschetz) + " vs " +
                    std::to_string(out.sigma_noether));
  }
  out.invariants = FourManifoldInvariants(out.chi, out.sigma_noether, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Pipelines

namespace {

CurveSummary explicit_summary(BiProjCurve curve) {
  CurveSummary s;
  s.bidegree_z = curve.d1();
  s.bidegree_w = curve.d2();
  s.genus = genus_bidegree(curve.d1(), curve.d2());
  s.fixed = fixed_points(curve, 4);
  for (const auto& p : s.fixed) s.weights.push_back(p.tangent_weight);
  s.curve = std::move(curve);
  return s;
}

CurveSummary counted_summary(int k) {
  CurveSummary s;
  s.bidegree_w = k;
  s.genus = genus_bidegree(4, k);
  s.weights.assign(static_cast<std::size_t>(k), 1);
  s.weights.insert(s.weights.end(), static_cast<std::size_t>(k), 3);
  return s;
}

void check_quotient_rational(CurveSummary& s) {
  // Every fixed point has the full group as stabilizer.
  s.riemann_hurwitz =
      riemann_hurwitz_check(s.genus, 4, 0, std::vector<std::int64_t>(s.weights.size(), 4));
}

Z4Pipeline assemble(CurveSummary first, CurveSummary second) {
  check_quotient_rational(first);
  check_quotient_rational(second);
  Z4Pipeline out;
  out.inventory = product_inventory(first.weights, first.genus, second.weights, second.genus, 4);
  out.resolution = resolve_quotient(out.inventory);
  out.elliptic_en = recognize_en(out.resolution.invariants);
  out.first = std::move(first);
  out.second = std::move(second);
  return out;
}

}  // namespace

Z4Pipeline paper_z4_pipeline() {
  CurveSummary c = explicit_summary(BiProjCurve::paper_curve());
  return assemble(c, c);
}

Z4Pipeline ck_cl_pipeline(int k, int l) {
  if (k < 1 || l < 1) throw Error(ErrorCode::OutOfRange, "C_k needs k >= 1");
  auto summary = [](int d) { return d <= 4 ? explicit_summary(BiProjCurve::ck_curve(d)) : counted_summary(d); };
  return assemble(summary(k), summary(l));
}

}  // namespace rbd
