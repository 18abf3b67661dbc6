#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "rbd/error.hpp"
#include "rbd/hj.hpp"
#include "rbd/surgery.hpp"

using namespace rbd;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an rbd::Error");
  return ErrorCode::InvalidArgument;
}

const FourManifoldInvariants kE4(48, -32, 0);

}  // namespace

TEST_CASE("blow_down examples") {
  const auto w1 = blow_down(kE4, 2, 1);
  CHECK(w1 == FourManifoldInvariants(47, -31));
  CHECK(w1.c1sq() == 1);
  const auto c31 = blow_down(kE4, 3, 1);
  CHECK(c31 == FourManifoldInvariants(46, -30));
  CHECK(c31.c1sq() == 2);
  CHECK(code_of([] { blow_down(FourManifoldInvariants(4, 0), 3, 1); }) == ErrorCode::InsufficientNegativePart);
  CHECK(code_of([] { blow_down(kE4, 4, 2); }) == ErrorCode::InvalidPQ);
  CHECK(blow_down(FourManifoldInvariants(48, -32, 2), 2, 1).b1() == 2);
}

TEST_CASE("full_blow_down examples") {
  const auto w8 = full_blow_down(kE4, BlowdownPlan::repeated(2, 1, 8));
  CHECK(w8 == FourManifoldInvariants(40, -24));
  CHECK(w8.c1sq() == 8);
  CHECK(w8.chi_h() == 4);
  CHECK(full_blow_down(kE4, BlowdownPlan{}) == kE4);
  const auto w9 = full_blow_down(kE4, BlowdownPlan::repeated(2, 1, 9));
  CHECK(w9 == FourManifoldInvariants(39, -23));
  CHECK(w9.c1sq() == 9);
  CHECK(code_of([] { full_blow_down(FourManifoldInvariants(12, -8), BlowdownPlan::repeated(2, 1, 10)); }) ==
        ErrorCode::InsufficientNegativePart);
  CHECK(code_of([] { BlowdownPlan({{6, 3}}); }) == ErrorCode::InvalidPQ);
  CHECK(BlowdownPlan({{2, 1}, {3, 1}, {5, 2}}).total_length() ==
        1 + 2 + static_cast<std::int64_t>(cpq_string(5, 2).length()));
}

TEST_CASE("chi_h is invariant under blow_down for p <= 50") {
  const FourManifoldInvariants big(1200, -800);
  for (std::int64_t p = 2; p <= 50; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto out = blow_down(big, p, q);
      REQUIRE(out.chi_h() == big.chi_h());
      REQUIRE(out.noether_identity_holds());
      const auto k = static_cast<std::int64_t>(cpq_string(p, q).length());
      REQUIRE(out.c1sq() == big.c1sq() + k);
    }
  }
}

TEST_CASE("blow-down plans commute") {
  std::mt19937_64 rng(8080);
  const std::vector<std::pair<std::int64_t, std::int64_t>> pool{{2, 1}, {3, 1}, {3, 2}, {5, 2}, {7, 3}, {4, 1}};
  const FourManifoldInvariants big(600, -400);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<std::int64_t, std::int64_t>> plan;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int k = 0; k < 6; ++k) plan.push_back(pool[pick(rng)]);
    const auto reference = full_blow_down(big, BlowdownPlan(plan));
    std::shuffle(plan.begin(), plan.end(), rng);
    REQUIRE(full_blow_down(big, BlowdownPlan(plan)) == reference);
    REQUIRE(reference.noether_identity_holds());
  }
}

TEST_CASE("noether checks") {
  const auto w1 = noether_check(FourManifoldInvariants(47, -31));
  CHECK_FALSE(w1.pass);
  CHECK(w1.margin == -1);
  CHECK(w1.general_type_possible);
  const auto w2 = noether_check(FourManifoldInvariants(46, -30));
  CHECK(w2.pass);
  CHECK(w2.margin == 0);
  const auto e4 = noether_check(kE4);
  CHECK_FALSE(e4.pass);
  CHECK_FALSE(e4.general_type_possible);
  CHECK(e4.caveat.find("not of general type") != std::string::npos);
  CHECK(code_of([] { noether_check(FourManifoldInvariants(48, -31)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("geography reports") {
  const auto w9 = geography_report(w4n(9));
  CHECK(w9.noether->pass);
  CHECK(*w9.bmy_pass);
  CHECK(*w9.bmy_margin == 27);
  CHECK(w9.consistent);

  const auto e4 = geography_report(kE4);
  CHECK(e4.elliptic_en == 4);

  // chi_h = (3 - 35)/4 = -8 is integral; the record fails on b+ < 0.
  const auto bad = geography_report(FourManifoldInvariants(3, -35));
  CHECK_FALSE(bad.consistent);
  CHECK(bad.chi_h == -8);
  CHECK(*bad.bplus < 0);

  const auto frac = geography_report(FourManifoldInvariants(3, -34));
  CHECK_FALSE(frac.consistent);
  CHECK_FALSE(frac.chi_h.has_value());
  CHECK_FALSE(frac.noether.has_value());
  CHECK(code_of([] { geography_report(FourManifoldInvariants(4, 0, 1)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("W4,n family") {
  for (std::int64_t n = 1; n <= 9; ++n) {
    const auto w = w4n(n);
    REQUIRE(w.chi() == 48 - n);
    REQUIRE(w.sigma() == -32 + n);
    REQUIRE(w.c1sq() == n);
    REQUIRE(w.chi_h() == 4);
    REQUIRE(w.bplus() == 7);
    REQUIRE(noether_check(w).pass == (n != 1));
  }
  CHECK(code_of([] { w4n(0); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { w4n(10); }) == ErrorCode::OutOfRange);
}
