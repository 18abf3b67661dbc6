#include "rbd/verify.hpp"

#include <functional>
#include <future>
#include <numeric>
#include <random>
#include <set>

#include "rbd/error.hpp"

namespace rbd {

std::optional<Fault> parse_fault(std::string_view name) {
  if (name == "none") return Fault::None;
  if (name == "delta-k2-sign") return Fault::DeltaK2Sign;
  if (name == "hj-term") return Fault::HjTerm;
  return std::nullopt;
}

std::string to_string(Fault f) {
  switch (f) {
    case Fault::None: return "none";
    case Fault::DeltaK2Sign: return "delta-k2-sign";
    case Fault::HjTerm: return "hj-term";
  }
  return "none";
}

namespace {

struct Context {
  Fault fault = Fault::None;

  HJString cpq(std::int64_t p, std::int64_t q) const {
    HJString s = cpq_string(p, q);
    if (fault != Fault::HjTerm) return s;
    auto t = s.terms();
    t.back() += 1;
    return HJString(t);
  }

  LocalResolver resolver() const {
    if (fault != Fault::DeltaK2Sign) return resolve;
    return [](const CyclicQuotientType& t) {
      ResolutionData r = resolve(t);
      r.delta_K2 = -r.delta_K2;
      return r;
    };
  }

  // The genus 3 pipeline assembled step by step so the resolver can be swapped.
  struct Z4 {
    std::vector<FixedPointDatum> fixed;
    QuotientInventory inventory;
    QuotientResolution resolution;
  };
  Z4 z4() const {
    Z4 z;
    z.fixed = fixed_points(BiProjCurve::paper_curve(), 4);
    z.inventory = product_inventory(z.fixed, genus_bidegree(4, 2), 4);
    z.resolution = resolve_quotient(z.inventory, resolver());
    return z;
  }
};

struct Scenario {
  std::string name;
  int criterion;
  std::string origin;
  std::function<Json()> expected;
  std::function<Json(const Context&)> computed;
};

Json invariants_brief(const FourManifoldInvariants& m) {
  return {{"chi", m.chi()}, {"sigma", m.sigma()}, {"c1sq", m.c1sq()}, {"chi_h", m.chi_h() ? Json(*m.chi_h()) : Json(nullptr)}};
}

// Sylvester resultant by plain elimination; independent of the polynomial
// gcd behind squarefree().
Rational sylvester_resultant(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  const std::size_t m = p.size() - 1, n = q.size() - 1, size = m + n;
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) a[i][i + j] = p[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) a[n + i][i + j] = q[n - j];
  Rational det(1);
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t piv = c;
    while (piv < size && a[piv][c].is_zero()) ++piv;
    if (piv == size) return Rational(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < size; ++r) {
      if (a[r][c].is_zero()) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < size; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::vector<Scenario> build_scenarios() {
  std::vector<Scenario> s;

  // --- the Z4 quotient of C x C
  s.push_back({"z4.fixed_points", 1, "literature",
               [] {
                 return Json::array({{{"point", "([0:1],[1:1])"}, {"weight", 1}},
                                     {{"point", "([0:1],[1:-1])"}, {"weight", 1}},
                                     {{"point", "([1:0],[1:i])"}, {"weight", 3}},
                                     {{"point", "([1:0],[1:-i])"}, {"weight", 3}}});
               },
               [](const Context&) {
                 Json out = Json::array();
                 for (const auto& f : fixed_points(BiProjCurve::paper_curve(), 4)) {
                   out.push_back({{"point", f.point.str()}, {"weight", f.tangent_weight}});
                 }
                 return out;
               }});
  s.push_back({"z4.inventory", 1, "literature",
               [] {
                 return Json{{"fixed_points", 16},
                             {"types", {{{"type", "1/4(1,1)"}, {"count", 8}, {"kind", "T"}},
                                        {{"type", "1/4(1,3)"}, {"count", 8}, {"kind", "rdp_A"}}}}};
               },
               [](const Context& ctx) {
                 const auto z = ctx.z4();
                 Json types = Json::array();
                 for (const auto& [t, mult] : z.inventory.types) {
                   types.push_back({{"type", t.str()}, {"count", mult}, {"kind", to_string(classify_T(t).kind)}});
                 }
                 return Json{{"fixed_points", z.inventory.fixed_point_count()}, {"types", types}};
               }});
  s.push_back({"z4.invariants", 1, "literature",
               [] { return Json{{"chi", 48}, {"sigma", -32}, {"c1sq", 0}, {"chi_h", 4}}; },
               [](const Context& ctx) { return invariants_brief(ctx.z4().resolution.invariants); }});
  s.push_back({"z4.elliptic", 1, "literature", [] { return Json{{"E_n", 4}}; },
               [](const Context& ctx) {
                 const auto en = recognize_en(ctx.z4().resolution.invariants);
                 return Json{{"E_n", en ? Json(*en) : Json(nullptr)}};
               }});

  // --- W4,n
  s.push_back({"w4n.table", 2, "literature",
               [] {
                 Json rows = Json::array();
                 for (int n = 1; n <= 9; ++n) rows.push_back({{"n", n}, {"chi_h", 4}, {"c1sq", n}, {"noether", n != 1}});
                 return rows;
               },
               [](const Context&) {
                 Json rows = Json::array();
                 for (int n = 1; n <= 9; ++n) {
                   const auto w = w4n(n);
                   rows.push_back({{"n", n},
                                   {"chi_h", w.chi_h() ? Json(*w.chi_h()) : Json(nullptr)},
                                   {"c1sq", w.c1sq()},
                                   {"noether", noether_check(w).pass}});
                 }
                 return rows;
               }});

  // --- double cover of Sigma_4
  s.push_back({"cover.sigma4", 3, "literature",
               [] { return Json{{"chi", 48}, {"sigma", -32}, {"c1sq", 0}, {"chi_h", 4}}; },
               [](const Context&) {
                 return invariants_brief(double_cover(hirzebruch_invariants(4), {4, 2, 8}).invariants);
               }});
  s.push_back({"cover.preimage_c0", 3, "literature",
               [] { return Json{{"components", 2}, {"self_intersection", -4}}; },
               [](const Context&) {
                 const auto sp = split_preimage({4, 1, 0}, {4, 4, 16});
                 return Json{{"components", sp.components}, {"self_intersection", sp.each_selfint}};
               }});
  s.push_back({"cover.twisted_cotangent", 3, "literature",
               [] { return Json{{"class", "-2f"}, {"effective", false}}; },
               [](const Context&) {
                 const auto d = det_twisted_cotangent(4, {4, 1, 2});
                 return Json{{"class", d.str()}, {"effective", is_effective(d)}};
               }});

  // --- continued fractions
  s.push_back({"hj.cpq_examples", 4, "literature",
               [] { return Json{{"2,1", {4}}, {"3,1", {5, 2}}}; },
               [](const Context& ctx) {
                 return Json{{"2,1", ctx.cpq(2, 1).terms()}, {"3,1", ctx.cpq(3, 1).terms()}};
               }});
  s.push_back({"hj.roundtrip_200", 4, "derived", [] { return Json{{"mismatches", 0}}; },
               [](const Context&) {
                 int bad = 0;
                 for (std::int64_t m = 2; m <= 200; ++m)
                   for (std::int64_t q = 1; q < m; ++q)
                     if (std::gcd(m, q) == 1 && hj_value(hj_expand(m, q)) != Rational(m, q)) ++bad;
                 return Json{{"mismatches", bad}};
               }});
  s.push_back({"hj.chain_determinant_200", 4, "derived", [] { return Json{{"mismatches", 0}}; },
               [](const Context&) {
                 int bad = 0;
                 for (std::int64_t m = 2; m <= 200; ++m)
                   for (std::int64_t q = 1; q < m; ++q)
                     if (std::gcd(m, q) == 1 && determinant(hj_expand(m, q).intersection_matrix()).abs() != Rational(m))
                       ++bad;
                 return Json{{"mismatches", bad}};
               }});
  s.push_back({"hj.cpq_definite_50", 4, "literature", [] { return Json{{"not_definite", 0}, {"term_below_2", 0}}; },
               [](const Context& ctx) {
                 int indefinite = 0, small = 0;
                 for (std::int64_t p = 2; p <= 50; ++p) {
                   for (std::int64_t q = 1; q < p; ++q) {
                     if (std::gcd(p, q) != 1) continue;
                     const HJString h = ctx.cpq(p, q);
                     for (auto b : h.terms()) small += b < 2 ? 1 : 0;
                     if (inertia(h.intersection_matrix()).n_minus != h.length()) ++indefinite;
                   }
                 }
                 return Json{{"not_definite", indefinite}, {"term_below_2", small}};
               }});
  s.push_back({"hj.cpq_boundary_50", 4, "literature", [] { return Json{{"mismatches", 0}}; },
               [](const Context& ctx) {
                 int bad = 0;
                 for (std::int64_t p = 2; p <= 50; ++p)
                   for (std::int64_t q = 1; q < p; ++q)
                     if (std::gcd(p, q) == 1 &&
                         !lens_equivalent(lens_of_chain(ctx.cpq(p, q)), LensSpace(p * p, 1 - p * q), true))
                       ++bad;
                 return Json{{"mismatches", bad}};
               }});

  // --- class T
  s.push_back({"sing.class_t_oracle_200", 5, "derived", [] { return Json{{"mismatches", 0}}; },
               [](const Context&) {
                 int bad = 0;
                 for (std::int64_t r = 2; r <= 200; ++r) {
                   for (std::int64_t q = 1; q < r; ++q) {
                     if (std::gcd(r, q) != 1) continue;
                     bool t_type = false;
                     for (std::int64_t n = 2; n * n <= r; ++n) {
                       if (r % (n * n) != 0) continue;
                       const std::int64_t d = r / (n * n);
                       for (std::int64_t a = 1; a < n; ++a)
                         if (std::gcd(a, n) == 1 && (d * n * a - 1) % r == q) t_type = true;
                     }
                     const TKind expected = q == r - 1 ? TKind::RdpA : t_type ? TKind::TType : TKind::NotClassT;
                     if (classify_T(normalize(r, 1, q)).kind != expected) ++bad;
                   }
                 }
                 return Json{{"mismatches", bad}};
               }});
  s.push_back({"sing.quarter_1_1", 5, "literature",
               [] { return Json{{"kind", "T"}, {"d", 1}, {"n", 2}, {"a", 1}}; },
               [](const Context&) {
                 const auto c = classify_T(normalize(4, 1, 1));
                 Json j{{"kind", to_string(c.kind)}};
                 if (c.factorization) {
                   j["d"] = c.factorization->d;
                   j["n"] = c.factorization->n;
                   j["a"] = c.factorization->a;
                 }
                 return j;
               }});
  s.push_back({"sing.quarter_1_3", 5, "literature", [] { return Json{{"kind", "rdp_A"}, {"index", 3}}; },
               [](const Context&) {
                 const auto c = classify_T(normalize(4, 1, 3));
                 return Json{{"kind", to_string(c.kind)}, {"index", c.rdp_index}};
               }});
  s.push_back({"sing.wahl_closure_900", 5, "derived", [] { return Json{{"equal", true}}; },
               [](const Context&) {
                 std::set<std::vector<std::int64_t>> closure;
                 std::vector<std::vector<std::int64_t>> stack{{4}};
                 while (!stack.empty()) {
                   auto t = stack.back();
                   stack.pop_back();
                   if (hj_value(HJString(t)).num() > 900 || !closure.insert(t).second) continue;
                   auto left = t;
                   left.front() += 1;
                   left.push_back(2);
                   auto right = t;
                   right.back() += 1;
                   right.insert(right.begin(), 2);
                   stack.push_back(std::move(left));
                   stack.push_back(std::move(right));
                 }
                 std::set<std::vector<std::int64_t>> recognized;
                 for (std::int64_t n = 2; n * n <= 900; ++n) {
                   for (std::int64_t q = 1; q < n * n; ++q) {
                     if (std::gcd(n * n, q) != 1) continue;
                     const auto c = classify_T(normalize(n * n, 1, q));
                     if (c.kind == TKind::TType && c.factorization->d == 1) recognized.insert(hj_expand(n * n, q).terms());
                   }
                 }
                 return Json{{"equal", closure == recognized}};
               }});

  // --- smoothing family
  s.push_back({"smooth.generic_fiber", 6, "literature", [] { return Json{{"smooth", true}, {"free", true}}; },
               [](const Context&) {
                 const TFamilySpec spec(1, 2, 1, {Rational(1)});
                 return Json{{"smooth", fiber_smooth(spec)}, {"free", action_free(spec)}};
               }});
  s.push_back({"smooth.central_fiber", 6, "literature", [] { return Json{{"smooth", false}}; },
               [](const Context&) { return Json{{"smooth", fiber_smooth(TFamilySpec(1, 2, 1, {Rational(0)}))}}; }});
  s.push_back({"smooth.nongeneric_t", 6, "derived", [] { return Json{{"smooth", false}}; },
               [](const Context&) {
                 return Json{{"smooth", fiber_smooth(TFamilySpec(2, 2, 1, {Rational(0), Rational(1)}))}};
               }});
  s.push_back({"smooth.resultant_oracle", 6, "derived", [] { return Json{{"mismatches", 0}}; },
               [](const Context&) {
                 std::mt19937_64 rng(2718);
                 int bad = 0;
                 for (int trial = 0; trial < 200; ++trial) {
                   const std::int64_t d = 1 + trial % 3, n = 2 + (trial / 3) % 3;
                   std::vector<Rational> t;
                   for (std::int64_t k = 0; k < d; ++k) {
                     const auto x = static_cast<std::int64_t>(rng() % 7) - 3;
                     t.emplace_back(rng() % 3 == 0 ? 0 : x, static_cast<std::int64_t>(1 + rng() % 3));
                   }
                   const TFamilySpec spec(d, n, 1, t);
                   const auto c = spec.fiber_polynomial().coefficients();
                   const bool oracle = !sylvester_resultant(c, spec.fiber_polynomial().derivative().coefficients()).is_zero();
                   if (fiber_smooth(spec) != oracle) ++bad;
                 }
                 return Json{{"mismatches", bad}};
               }});

  // --- consistency traps
  s.push_back({"consistency.noether_formula", 7, "derived", [] { return Json{{"violations", 0}}; },
               [](const Context& ctx) {
                 std::vector<FourManifoldInvariants> all{ctx.z4().resolution.invariants,
                                                         double_cover(hirzebruch_invariants(4), {4, 2, 8}).invariants,
                                                         blow_down(FourManifoldInvariants(48, -32), 3, 1)};
                 for (int n = 1; n <= 9; ++n) all.push_back(w4n(n));
                 for (int k = 1; k <= 3; ++k)
                   for (int l = 1; l <= 3; ++l) all.push_back(ck_cl_pipeline(k, l).resolution.invariants);
                 int bad = 0;
                 for (const auto& m : all) bad += m.noether_identity_holds() ? 0 : 1;
                 return Json{{"violations", bad}};
               }});
  s.push_back({"consistency.sigma_routes", 7, "literature",
               [] { return Json{{"lefschetz", -32}, {"noether", -32}}; },
               [](const Context& ctx) {
                 const auto r = ctx.z4().resolution;
                 return Json{{"lefschetz", r.sigma_lefschetz}, {"noether", r.sigma_noether}};
               }});
  s.push_back({"consistency.lefschetz_integral", 7, "derived",
               [] { return Json{{"total", "16+0*i"}, {"chi_h", 4}, {"family_non_integral", 0}}; },
               [](const Context& ctx) {
                 const auto z = ctx.z4();
                 int bad = 0;
                 for (int k = 1; k <= 4; ++k) {
                   for (int l = 1; l <= 4; ++l) {
                     const auto inv = ck_cl_pipeline(k, l).inventory;
                     try {
                       holomorphic_lefschetz(inv.cover_chi_o, inv.group_order, inv.elements);
                     } catch (const Error&) {
                       ++bad;
                     }
                   }
                 }
                 return Json{{"total", z.resolution.lefschetz.total.str()},
                             {"chi_h", z.resolution.lefschetz.chi_o},
                             {"family_non_integral", bad}};
               }});
  return s;
}

const std::vector<Scenario>& scenarios() {
  static const std::vector<Scenario> s = build_scenarios();
  return s;
}

ScenarioResult run_one(const Scenario& sc, const Context& ctx) {
  ScenarioResult r{sc.name, sc.criterion, sc.origin, sc.expected(), nullptr, false, std::nullopt};
  try {
    r.computed = sc.computed(ctx);
    r.pass = r.computed == r.expected;
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace

std::vector<std::string> scenario_names() {
  std::vector<std::string> out;
  for (const auto& s : scenarios()) out.push_back(s.name);
  return out;
}

std::vector<ScenarioResult> run_scenarios(Fault fault, bool parallel) {
  const Context ctx{fault};
  std::vector<ScenarioResult> out;
  if (!parallel) {
    for (const auto& s : scenarios()) out.push_back(run_one(s, ctx));
    return out;
  }
  std::vector<std::future<ScenarioResult>> pending;
  for (const auto& s : scenarios()) pending.push_back(std::async(std::launch::async, run_one, std::cref(s), ctx));
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

Json verify_report(const std::vector<ScenarioResult>& results, Fault fault) {
  Json list = Json::array();
  Json failing = Json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    list.push_back({{"name", r.name},
                    {"criterion", r.criterion},
                    {"origin", r.origin},
                    {"expected", r.expected},
                    {"computed", r.computed},
                    {"pass", r.pass},
                    {"error", r.error ? Json(*r.error) : Json(nullptr)}});
    if (r.pass) {
      ++passed;
    } else {
      failing.push_back(r.name);
    }
  }
  return {{"fault", fault == Fault::None ? Json(nullptr) : Json(to_string(fault))},
          {"scenarios", list},
          {"summary", {{"total", results.size()}, {"passed", passed}, {"failed", results.size() - passed}, {"failing", failing}}},
          {"all_pass", failing.empty()}};
}

}  // namespace rbd
