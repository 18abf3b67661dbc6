#include "rbd/report.hpp"

#include "rbd/error.hpp"

namespace rbd {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const GaussRational& z) { return z.str(); }

Json to_json(const HJString& s) { return s.terms(); }

Json to_json(const LensSpace& l) { return {{"m", l.m()}, {"q", l.q()}, {"label", l.str()}}; }

Json to_json(const Inertia& in) {
  return {{"n_minus", in.n_minus}, {"n_zero", in.n_zero}, {"n_plus", in.n_plus}};
}

Json to_json(const SymMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.rows()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json to_json(const CyclicQuotientType& t) {
  return {{"r", t.r}, {"a", t.a}, {"b", t.b}, {"q", t.q}, {"label", t.str()}};
}

Json to_json(const TClassification& c) {
  Json j{{"kind", to_string(c.kind)}, {"class_T", c.is_class_t()}};
  j["rdp_index"] = c.kind == TKind::RdpA ? Json(c.rdp_index) : Json(nullptr);
  if (c.factorization) {
    j["factorization"] = {{"d", c.factorization->d}, {"n", c.factorization->n}, {"a", c.factorization->a}};
  } else {
    j["factorization"] = nullptr;
  }
  return j;
}

Json to_json(const ResolutionData& r) {
  Json disc = Json::array();
  for (const auto& a : r.discrepancies) disc.push_back(to_json(a));
  return {{"string", to_json(r.string)},
          {"self_intersections", [&] {
             std::vector<std::int64_t> w;
             for (auto b : r.string.terms()) w.push_back(-b);
             return w;
           }()},
          {"discrepancies", disc},
          {"delta_K2", to_json(r.delta_K2)},
          {"delta_chi", r.delta_chi}};
}

Json to_json(const FourManifoldInvariants& m) {
  return {{"chi", m.chi()},           {"sigma", m.sigma()},
          {"b1", m.b1()},             {"c1sq", m.c1sq()},
          {"chi_h", optional_json(m.chi_h())}, {"b2", m.b2()},
          {"bplus", optional_json(m.bplus())}, {"bminus", optional_json(m.bminus())},
          {"b1_assumed", m.b1_assumed()}};
}

Json to_json(const HirzebruchClass& x) {
  return {{"e", x.e}, {"a", x.a}, {"b", x.b}, {"label", x.str()}};
}

Json to_json(const NoetherCheck& n) {
  return {{"pass", n.pass},
          {"margin", n.margin},
          {"general_type_possible", n.general_type_possible},
          {"caveat", n.caveat}};
}

Json to_json(const GeographyReport& g) {
  return {{"invariants", to_json(g.invariants)},
          {"noether", g.noether ? to_json(*g.noether) : Json(nullptr)},
          {"bmy", g.bmy_pass ? Json{{"pass", *g.bmy_pass}, {"margin", *g.bmy_margin}} : Json(nullptr)},
          {"elliptic_En", optional_json(g.elliptic_en)},
          {"consistent", g.consistent},
          {"issues", g.issues}};
}

Json to_json(const BiProjPoint& p) {
  return {{"z", {to_json(p.z[0]), to_json(p.z[1])}},
          {"w", {to_json(p.w[0]), to_json(p.w[1])}},
          {"label", p.str()}};
}

Json to_json(const QuotientInventory& inv) {
  Json types = Json::array();
  for (const auto& [t, mult] : inv.types) {
    Json entry = to_json(t);
    entry["multiplicity"] = mult;
    entry["classification"] = to_json(classify_T(t));
    types.push_back(std::move(entry));
  }
  Json elements = Json::array();
  for (const auto& e : inv.elements) {
    elements.push_back({{"exponent", e.exponent}, {"fixed_points", e.weights.size()}});
  }
  return {{"group_order", inv.group_order},
          {"cover", {{"chi", inv.cover_chi}, {"K2", inv.cover_k2}, {"chi_O", inv.cover_chi_o}}},
          {"fixed_points", inv.fixed_point_count()},
          {"types", types},
          {"elements", elements}};
}

Json to_json(const QuotientResolution& r) {
  Json local = Json::array();
  for (const auto& l : r.local) {
    local.push_back({{"type", to_json(l.type)},
                     {"multiplicity", l.multiplicity},
                     {"classification", to_json(l.classification)},
                     {"resolution", to_json(l.resolution)}});
  }
  Json contributions = Json::array();
  for (const auto& c : r.lefschetz.contributions) contributions.push_back(to_json(c));
  return {{"local", local},
          {"chi_quotient", r.chi_quotient},
          {"K2_quotient", to_json(r.k2_quotient)},
          {"delta_chi", r.delta_chi},
          {"delta_K2", to_json(r.delta_k2)},
          {"chi", r.chi},
          {"c1sq", r.c1sq},
          {"lefschetz",
           {{"contributions", contributions}, {"total", to_json(r.lefschetz.total)}, {"chi_h", r.lefschetz.chi_o}}},
          {"sigma_lefschetz", r.sigma_lefschetz},
          {"sigma_noether", r.sigma_noether},
          {"invariants", to_json(r.invariants)}};
}

namespace {

Json curve_json(const CurveSummary& c) {
  Json fixed = Json::array();
  for (const auto& f : c.fixed) {
    Json p = to_json(f.point);
    p["weight"] = f.tangent_weight;
    fixed.push_back(std::move(p));
  }
  return {{"equation", c.curve ? Json(c.curve->str()) : Json(nullptr)},
          {"bidegree", {c.bidegree_z, c.bidegree_w}},
          {"genus", c.genus},
          {"fixed_points", fixed},
          {"weights", c.weights},
          {"riemann_hurwitz", c.riemann_hurwitz}};
}

}  // namespace

Json to_json(const Z4Pipeline& z) {
  return {{"curves", {curve_json(z.first), curve_json(z.second)}},
          {"inventory", to_json(z.inventory)},
          {"resolution", to_json(z.resolution)},
          {"invariants", to_json(z.resolution.invariants)},
          {"elliptic_En", optional_json(z.elliptic_en)}};
}

Json to_json(const SmoothingReport& r) {
  Json cpq = Json::array();
  for (const auto& x : r.cpq) {
    cpq.push_back({{"convention", x.convention},
                   {"p", x.p},
                   {"q", x.q},
                   {"cpq_string", x.cpq},
                   {"matches", x.matches},
                   {"reversed", x.reversed}});
  }
  return {{"type", to_json(r.type)},
          {"classification", to_json(r.classification)},
          {"resolution", to_json(r.resolution)},
          {"fiber_polynomial", r.fiber_polynomial},
          {"action_preserves", r.preserves},
          {"fiber_smooth", r.smooth},
          {"action_free", r.free},
          {"k", r.k},
          {"delta_chi", optional_json(r.delta_chi)},
          {"delta_sigma", optional_json(r.delta_sigma)},
          {"cpq_cross_reference", cpq}};
}

Json hj_expand_report(std::int64_t m, std::int64_t q) {
  const HJString s = hj_expand(m, q);
  return {{"m", m},
          {"q", q},
          {"string", to_json(s)},
          {"value", to_json(hj_value(s))},
          {"length", s.length()},
          {"dual", to_json(dual_string(m, q))},
          {"lens", to_json(lens_of_chain(s))}};
}

Json hj_cpq_report(std::int64_t p, std::int64_t q) {
  const HJString s = cpq_string(p, q);
  const LensSpace lens = lens_of_chain(s);
  const LensSpace expected(p * p, 1 - p * q);
  return {{"p", p},
          {"q", q},
          {"string", to_json(s)},
          {"value", to_json(hj_value(s))},
          {"length", s.length()},
          {"lens", to_json(lens)},
          {"expected_boundary", to_json(expected)},
          {"oriented_equivalent", lens_equivalent(lens, expected, false)},
          {"equivalent_up_to_reversal", lens_equivalent(lens, expected, true)},
          {"negative_definite", inertia(s.intersection_matrix()).n_minus == s.length()}};
}

Json sing_classify_report(std::int64_t r, std::int64_t a, std::int64_t b) {
  const CyclicQuotientType t = normalize(r, a, b);
  const TClassification c = classify_T(t);
  Json j{{"type", to_json(t)}, {"classification", to_json(c)}};
  j["qg_deformation_dim"] = c.kind == TKind::TType ? Json(qg_deformation_dim(c)) : Json(nullptr);
  return j;
}

Json sing_resolve_report(std::int64_t r, std::int64_t q) {
  const CyclicQuotientType t = normalize(r, 1, q);
  return {{"type", to_json(t)}, {"classification", to_json(classify_T(t))}, {"resolution", to_json(resolve(t))}};
}

Json plumbing_report(const PlumbingGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) vertices.push_back({{"id", v.id}, {"weight", v.weight}, {"genus", v.genus}});
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({g.vertices()[a].id, g.vertices()[b].id});
  const SymMatrix m = intersection_matrix(g);
  Json j{{"vertices", vertices},
         {"edges", edges},
         {"matrix", to_json(m)},
         {"inertia", to_json(inertia(m))},
         {"negative_definite", is_negative_definite(g)}};
  try {
    const HJString s = chain_string(g);
    j["chain"] = to_json(s);
    j["boundary"] = to_json(lens_of_chain(s));
    j["boundary_error"] = nullptr;
  } catch (const Error& e) {
    j["chain"] = nullptr;
    j["boundary"] = nullptr;
    j["boundary_error"] = to_string(e.code());
  }
  Json matches = Json::array();
  for (const auto& c : find_all_cpq(g)) {
    matches.push_back({{"p", c.p}, {"q", c.q}, {"vertex_ids", c.vertex_ids}});
  }
  j["cpq_matches"] = matches;
  return j;
}

Json double_cover_report(std::int64_t e, std::int64_t a, std::int64_t b) {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "e must be nonnegative");
  const HirzebruchClass L{e, a, b};
  const DoubleCoverResult r = double_cover(hirzebruch_invariants(e), L);
  return {{"e", e},
          {"L", to_json(L)},
          {"branch", to_json(r.branch)},
          {"branch_euler", r.branch_euler},
          {"invariants", to_json(r.invariants)},
          {"c1sq", r.c1sq},
          {"chi_h", r.chi_h},
          {"disconnected", r.disconnected},
          {"elliptic_En", optional_json(recognize_en(r.invariants))}};
}

Json en_report(const FourManifoldInvariants& m) {
  return {{"invariants", to_json(m)}, {"elliptic_En", optional_json(recognize_en(m))}};
}

Json blowdown_report(const FourManifoldInvariants& m, const BlowdownPlan& plan) {
  Json steps = Json::array();
  for (const auto& [p, q] : plan.configs()) {
    steps.push_back({{"p", p}, {"q", q}, {"k", cpq_string(p, q).length()}});
  }
  const FourManifoldInvariants out = full_blow_down(m, plan);
  Json j{{"input", to_json(m)}, {"plan", steps}, {"output", to_json(out)}};
  j["geography"] = out.b1() == 0 ? to_json(geography_report(out)) : Json(nullptr);
  return j;
}

Json w4n_report(std::int64_t n) {
  const FourManifoldInvariants w = w4n(n);
  Json j{{"n", n}};
  const Json base = to_json(w);
  for (const auto& [key, value] : base.items()) j[key] = value;
  const GeographyReport g = geography_report(w);
  j["noether"] = to_json(*g.noether);
  j["bmy"] = {{"pass", *g.bmy_pass}, {"margin", *g.bmy_margin}};
  return j;
}

Json smoothing_json(const TFamilySpec& spec) {
  Json t = Json::array();
  for (const auto& x : spec.t) t.push_back(to_json(x));
  Json j{{"d", spec.d}, {"n", spec.n}, {"a", spec.a}, {"t", t}};
  const Json report = to_json(smoothing_report(spec));
  for (const auto& [key, value] : report.items()) j[key] = value;
  return j;
}

}  // namespace rbd
