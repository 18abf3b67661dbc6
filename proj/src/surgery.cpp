#include "rbd/surgery.hpp"

#include "rbd/error.hpp"
#include "rbd/hj.hpp"

namespace rbd {

BlowdownPlan::BlowdownPlan(std::vector<std::pair<std::int64_t, std::int64_t>> configs)
    : configs_(std::move(configs)) {
  for (const auto& [p, q] : configs_) cpq_string(p, q);
}

BlowdownPlan BlowdownPlan::repeated(std::int64_t p, std::int64_t q, std::size_t count) {
  return BlowdownPlan(std::vector<std::pair<std::int64_t, std::int64_t>>(count, {p, q}));
}

std::int64_t BlowdownPlan::total_length() const {
  std::int64_t k = 0;
  for (const auto& [p, q] : configs_) k += static_cast<std::int64_t>(cpq_string(p, q).length());
  return k;
}

namespace {

void require_room(const FourManifoldInvariants& m, std::int64_t k) {
  auto bminus = m.bminus();
  if (!bminus || k > *bminus) {
    throw Error(ErrorCode::InsufficientNegativePart,
                "need " + std::to_string(k) + " negative directions, have " +
                    (bminus ? std::to_string(*bminus) : std::string("none")));
  }
}

}  // namespace

FourManifoldInvariants blow_down(const FourManifoldInvariants& m, std::int64_t p, std::int64_t q) {
  const auto k = static_cast<std::int64_t>(cpq_string(p, q).length());
  require_room(m, k);
  FourManifoldInvariants out(m.chi() - k, m.sigma() + k, m.b1());
  if (out.chi_h() != m.chi_h()) {
    throw Error(ErrorCode::ConsistencyFailure, "chi_h changed under rational blow-down");
  }
  return out;
}

FourManifoldInvariants full_blow_down(const FourManifoldInvariants& m, const BlowdownPlan& plan) {
  require_room(m, plan.total_length());
  FourManifoldInvariants out = m;
  for (const auto& [p, q] : plan.configs()) out = blow_down(out, p, q);
  return out;
}

NoetherCheck noether_check(const FourManifoldInvariants& m) {
  auto h = m.chi_h();
  if (!h) throw Error(ErrorCode::InvalidArgument, "Noether check needs an integral chi_h with b1 = 0");
  NoetherCheck out;
  out.margin = m.c1sq() - (2 * *h - 6);
  out.pass = out.margin >= 0;
  out.general_type_possible = m.c1sq() > 0 && *h > 0;
  out.caveat = out.general_type_possible
                   ? "applies to minimal surfaces of general type"
                   : "not of general type: the inequality does not apply";
  return out;
}

GeographyReport geography_report(const FourManifoldInvariants& m) {
  if (m.b1() != 0) throw Error(ErrorCode::InvalidArgument, "geography report assumes b1 = 0");
  GeographyReport r{m, m.chi_h(), m.bplus(), m.bminus(), {}, {}, {}, recognize_en(m), true, {}};
  if (!r.chi_h) {
    r.consistent = false;
    r.issues.emplace_back("chi_h = (chi + sigma)/4 is not an integer");
  }
  if (!r.bplus || !r.bminus || *r.bplus < 0 || *r.bminus < 0) {
    r.consistent = false;
    r.issues.emplace_back("b+ and b- are not nonnegative integers");
  }
  if (r.chi_h) {
    r.noether = noether_check(m);
    r.bmy_margin = 9 * *r.chi_h - m.c1sq();
    r.bmy_pass = *r.bmy_margin >= 0;
  }
  return r;
}

FourManifoldInvariants w4n(std::int64_t n) {
  if (n < 1 || n > 9) throw Error(ErrorCode::OutOfRange, "W_{4,n} is defined for 1 <= n <= 9");
  return full_blow_down(FourManifoldInvariants(48, -32, 0),
                        BlowdownPlan::repeated(2, 1, static_cast<std::size_t>(n)));
}

}  // namespace rbd
