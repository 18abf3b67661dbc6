// Acceptance runner: one PASS/FAIL line per criterion, exact comparisons only.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "rbd/cli.hpp"
#include "rbd/error.hpp"
#include "rbd/hj.hpp"
#include "rbd/plumbing.hpp"
#include "rbd/quotients.hpp"
#include "rbd/singularities.hpp"
#include "rbd/smoothing.hpp"
#include "rbd/surfaces.hpp"
#include "rbd/surgery.hpp"
#include "rbd/symmatrix.hpp"

using namespace rbd;
using nlohmann::json;

namespace {

// Collects the first failed check of a criterion.
class Checks {
public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  template <class A, class B>
  void equal(const A& computed, const B& expected, const std::string& what) {
    ++count_;
    if (!(computed == expected) && failure_.empty()) {
      std::ostringstream s;
      s << what << ": expected " << expected << ", got " << computed;
      failure_ = s.str();
    }
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  std::size_t count() const { return count_; }

private:
  std::size_t count_ = 0;
  std::string failure_;
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rbd");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

void quotient_pipeline(Checks& c) {
  const auto run = cli({"quotient", "demo", "paper-z4"});
  c.equal(run.code, 0, "exit code");
  const json j = json::parse(run.out);

  const std::vector<std::pair<std::string, std::int64_t>> expected_points{
      {"([0:1],[1:1])", 1}, {"([0:1],[1:-1])", 1}, {"([1:0],[1:i])", 3}, {"([1:0],[1:-i])", 3}};
  for (const auto& curve : j["curves"]) {
    c.equal(curve["genus"].get<int>(), 3, "genus of C");
    c.equal(curve["fixed_points"].size(), expected_points.size(), "fixed point count");
    for (std::size_t i = 0; i < expected_points.size() && i < curve["fixed_points"].size(); ++i) {
      c.equal(curve["fixed_points"][i]["label"].get<std::string>(), expected_points[i].first, "fixed point");
      c.equal(curve["fixed_points"][i]["weight"].get<std::int64_t>(), expected_points[i].second, "weight");
    }
    c.expect(curve["riemann_hurwitz"] == true, "Riemann-Hurwitz for C -> C/Z4");
  }

  const json& inv = j["inventory"];
  c.equal(inv["fixed_points"].get<int>(), 16, "product fixed points");
  c.equal(inv["types"].size(), 2u, "number of singularity types");
  if (inv["types"].size() == 2) {
    c.equal(inv["types"][0]["label"].get<std::string>(), "1/4(1,1)", "first type");
    c.equal(inv["types"][0]["multiplicity"].get<int>(), 8, "1/4(1,1) count");
    c.equal(inv["types"][1]["label"].get<std::string>(), "1/4(1,3)", "second type");
    c.equal(inv["types"][1]["classification"]["kind"].get<std::string>(), "rdp_A", "A3 kind");
    c.equal(inv["types"][1]["classification"]["rdp_index"].get<int>(), 3, "A3 index");
    c.equal(inv["types"][1]["multiplicity"].get<int>(), 8, "A3 count");
  }

  const json& m = j["invariants"];
  c.equal(m["chi"].get<int>(), 48, "chi");
  c.equal(m["sigma"].get<int>(), -32, "sigma");
  c.equal(m["c1sq"].get<int>(), 0, "c1^2");
  c.equal(m["chi_h"].get<int>(), 4, "chi_h");
  c.equal(j["elliptic_En"].get<int>(), 4, "E(n) recognition");
}

void w4n_table(Checks& c) {
  const FourManifoldInvariants e4(48, -32);
  for (std::int64_t n = 1; n <= 9; ++n) {
    const auto m = w4n(n);
    const auto folded = full_blow_down(e4, BlowdownPlan::repeated(2, 1, static_cast<std::size_t>(n)));
    c.expect(m == folded, "w4n equals n-fold blow-down, n=" + std::to_string(n));
    c.equal(m.chi_h().value_or(-1), 4, "chi_h, n=" + std::to_string(n));
    c.equal(m.c1sq(), n, "c1^2, n=" + std::to_string(n));
    c.equal(m.chi(), 48 - n, "chi, n=" + std::to_string(n));
    c.equal(m.sigma(), -32 + n, "sigma, n=" + std::to_string(n));
    c.equal(noether_check(m).pass, n != 1, "Noether check, n=" + std::to_string(n));
  }
}

void double_cover_sigma4(Checks& c) {
  const HirzebruchClass C0{4, 1, 0};
  const HirzebruchClass f{4, 0, 1};
  const HirzebruchClass L = C0 * 2 + f * 8;
  const HirzebruchClass B = L * 2;
  c.expect(B == HirzebruchClass{4, 4, 16}, "branch class 4(C0+4f)");
  const auto cover = double_cover(hirzebruch_invariants(4), L);
  c.equal(cover.invariants.chi(), 48, "chi");
  c.equal(cover.invariants.sigma(), -32, "sigma");
  c.equal(cover.invariants.c1sq(), 0, "c1^2");
  c.equal(genus_smooth_member(B), 21, "branch genus");
  c.equal(intersect(C0, B), 0, "C0 disjoint from branch");
  const auto split = split_preimage(C0, B);
  c.equal(split.components, 2, "preimage components");
  c.equal(split.each_selfint, -4, "preimage self-intersection");
  const auto det = det_twisted_cotangent(4, C0 + f * 2);
  c.expect(det == HirzebruchClass{4, 0, -2}, "det twisted cotangent = -2f");
  c.expect(!is_effective(det), "-2f not effective");
}

void continued_fractions(Checks& c) {
  for (std::int64_t m = 2; m <= 200; ++m) {
    for (std::int64_t q = 1; q < m; ++q) {
      if (std::gcd(m, q) != 1) continue;
      const auto s = hj_expand(m, q);
      c.expect(oracle::hj_value(s.terms()) == Rational(m, q), "roundtrip " + std::to_string(m) + "/" + std::to_string(q));
      c.expect(hj_value(s) == Rational(m, q), "library value " + std::to_string(m) + "/" + std::to_string(q));
      const Integer det = oracle::chain_det(s.terms());
      c.expect(det == m || det == -m, "chain determinant " + std::to_string(m) + "/" + std::to_string(q));
    }
  }
  for (std::int64_t p = 2; p <= 50; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const std::string tag = "C_" + std::to_string(p) + "," + std::to_string(q);
      const auto s = cpq_string(p, q);
      const auto g = PlumbingGraph::chain(s);
      c.expect(is_negative_definite(g), tag + " negative definite");
      const auto signs = oracle::leading_minor_signs(intersection_matrix(g).rows());
      bool alternating = true;
      for (std::size_t k = 0; k < signs.size(); ++k) alternating = alternating && signs[k] == (k % 2 == 0 ? -1 : 1);
      c.expect(alternating, tag + " leading minors alternate");
      const std::int64_t m = p * p;
      const LensSpace expected(m, (((1 - p * q) % m) + m) % m);
      c.expect(lens_equivalent(boundary_lens(g), expected, true), tag + " boundary L(p^2, 1-pq)");
    }
  }
}

void class_t(Checks& c) {
  for (std::int64_t r = 2; r <= 200; ++r) {
    for (std::int64_t q = 1; q < r; ++q) {
      if (std::gcd(r, q) != 1) continue;
      const auto cls = classify_T(normalize(r, 1, q));
      const auto brute = oracle::t_factorizations(r, q);
      const bool rdp = q == r - 1;
      const std::string tag = "1/" + std::to_string(r) + "(1," + std::to_string(q) + ")";
      if (rdp) {
        c.expect(cls.kind == TKind::RdpA && cls.rdp_index == r - 1, tag + " is A_{r-1}");
        c.expect(brute.empty(), tag + " has no T factorization");
      } else if (brute.empty()) {
        c.expect(cls.kind == TKind::NotClassT, tag + " not class T");
      } else {
        c.equal(brute.size(), 1u, tag + " factorization count");
        c.expect(cls.kind == TKind::TType && cls.factorization &&
                     *cls.factorization == TFactorization{brute[0].d, brute[0].n, brute[0].a},
                 tag + " T factorization");
      }
    }
  }
  const auto quarter = classify_T(normalize(4, 1, 1));
  c.expect(quarter.kind == TKind::TType && quarter.factorization == TFactorization{1, 2, 1}, "1/4(1,1) -> T(1,2,1)");
  const auto a3 = classify_T(normalize(4, 1, 3));
  c.expect(a3.kind == TKind::RdpA && a3.rdp_index == 3, "1/4(1,3) -> A3");

  std::set<std::vector<std::int64_t>> recognized;
  for (std::int64_t n = 2; n * n <= 900; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const auto s = hj_expand(n * n, n * a - 1);
      recognized.insert(s.terms());
      const auto cls = classify_T(normalize(n * n, 1, n * a - 1));
      c.expect(cls.kind == TKind::TType && cls.factorization && cls.factorization->d == 1,
               "d=1 type n=" + std::to_string(n));
    }
  }
  c.expect(recognized == oracle::wahl_closure(900), "Wahl closure n^2 <= 900");
}

void smoothing(Checks& c) {
  const TFamilySpec base(1, 2, 1, {Rational(1)});
  c.expect(fiber_smooth(base) && action_free(base), "(1,2,1), t0=1 smooth and free");
  const TFamilySpec other(1, 2, 1, {Rational(-3, 7)});
  c.expect(fiber_smooth(other) && action_free(other), "(1,2,1), t0=-3/7 smooth and free");
  const TFamilySpec central(1, 2, 1, {Rational(0)});
  c.expect(!fiber_smooth(central), "t=0 central fiber singular");
  c.expect(!action_free(central), "t=0 action not free");
  const TFamilySpec nongeneric(2, 2, 1, {Rational(0), Rational(1)});
  c.expect(!fiber_smooth(nongeneric), "(2,2,1), t=(0,1) not smooth");

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  std::size_t samples = 0;
  for (std::int64_t d = 1; d <= 3; ++d) {
    for (std::int64_t n = 2; n <= 4; ++n) {
      for (std::int64_t a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        for (int trial = 0; trial < 25; ++trial) {
          std::vector<Rational> t;
          for (std::int64_t k = 0; k < d; ++k) t.emplace_back(small(rng), den(rng));
          const TFamilySpec spec(d, n, a, t);
          const auto p = spec.fiber_polynomial().coefficients();
          const bool nonzero = !oracle::resultant(p, oracle::derivative(p)).is_zero();
          c.expect(fiber_smooth(spec) == nonzero, "resultant oracle");
          ++samples;
        }
      }
    }
  }
  c.expect(samples > 0, "resultant samples");
}

void consistency(Checks& c) {
  const auto z4 = paper_z4_pipeline();
  const auto& res = z4.resolution;
  const auto& m = res.invariants;
  c.expect(m.noether_identity_holds(), "Noether identity, quotient");
  c.equal(res.sigma_lefschetz, std::int64_t{-32}, "sigma via Lefschetz");
  c.equal(res.sigma_noether, std::int64_t{-32}, "sigma via (c1^2 - 2 chi)/3");
  c.expect(res.lefschetz.total.is_real(), "Lefschetz total real");
  c.expect(res.lefschetz.total.re().is_integer(), "Lefschetz total integral");
  c.equal(res.lefschetz.chi_o, std::int64_t{4}, "Lefschetz chi_h");

  // Element data as listed: g and g^3 each fix 8 points of weights (1,1) and
  // 8 of weights (1,3) up to inversion; g^2 fixes all 16 with weights (2,2).
  ElementFixedData g1{1, {}}, g2{2, {}}, g3{3, {}};
  for (int k = 0; k < 8; ++k) {
    g1.weights.push_back({1, 1});
    g1.weights.push_back({1, 3});
    g3.weights.push_back({3, 3});
    g3.weights.push_back({3, 1});
  }
  for (int k = 0; k < 16; ++k) g2.weights.push_back({2, 2});
  const auto listed = holomorphic_lefschetz(4, 4, {g1, g2, g3});
  c.expect(listed.contributions.at(0) == GaussRational(Rational(4), Rational(4)), "g contribution 4+4i");
  c.expect(listed.contributions.at(1) == GaussRational(Rational(4)), "g^2 contribution 4");
  c.expect(listed.contributions.at(2) == GaussRational(Rational(4), Rational(-4)), "g^3 contribution 4-4i");
  c.expect(listed.total == GaussRational(Rational(16)), "listed total 16");
  c.equal(listed.chi_o, std::int64_t{4}, "listed chi_h");

  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= 6; ++l) {
      const auto p = ck_cl_pipeline(k, l);
      c.expect(p.resolution.invariants.noether_identity_holds(), "Noether identity, C_k x C_l");
      c.expect(p.resolution.lefschetz.total.is_real(), "Lefschetz real, C_k x C_l");
      c.equal(p.resolution.sigma_lefschetz, p.resolution.sigma_noether, "sigma routes, C_k x C_l");
    }
  for (std::int64_t n = 1; n <= 9; ++n) c.expect(w4n(n).noether_identity_holds(), "Noether identity, W4n");
  c.expect(double_cover(hirzebruch_invariants(4), HirzebruchClass{4, 2, 8}).invariants.noether_identity_holds(),
           "Noether identity, double cover");
}

void verify_paper(Checks& c) {
  const auto first = cli({"verify-paper"});
  const auto second = cli({"verify-paper"});
  const auto serial = cli({"verify-paper", "--serial"});
  c.equal(first.code, 0, "verify-paper exit code");
  c.expect(first.out == second.out && first.out == serial.out, "byte-identical reports");
  const json j = json::parse(first.out);
  std::set<std::string> criteria;
  for (const auto& s : j["scenarios"]) criteria.insert(s["criterion"].dump());
  c.equal(criteria.size(), 7u, "criteria 1-7 covered");
  for (const std::string fault : {"delta-k2-sign", "hj-term"}) {
    const auto broken = cli({"verify-paper", "--inject-fault", fault});
    c.equal(broken.code, 1, "exit code with fault " + fault);
    c.expect(broken.err.find("FAIL ") != std::string::npos, "named failing scenario for " + fault);
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    void (*body)(Checks&);
  };
  const std::vector<Criterion> criteria{
      {1, "Z4 quotient pipeline", quotient_pipeline},
      {2, "W4,n table", w4n_table},
      {3, "double cover of Sigma_4", double_cover_sigma4},
      {4, "continued-fraction calculus", continued_fractions},
      {5, "class T recognition", class_t},
      {6, "smoothing diagnostics", smoothing},
      {7, "consistency traps", consistency},
      {8, "verify-paper aggregate", verify_paper},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks c;
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " (" << c.count()
              << " checks)";
    if (!c.ok()) std::cout << " -- " << c.failure();
    std::cout << '\n';
    failed += c.ok() ? 0 : 1;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " in "
            << ms.count() << " ms\n";
  return failed == 0 ? 0 : 1;
}
