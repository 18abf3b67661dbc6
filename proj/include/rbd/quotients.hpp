#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbd/gauss.hpp"
#include "rbd/poly.hpp"
#include "rbd/singularities.hpp"
#include "rbd/surfaces.hpp"

namespace rbd {

// Point ([z0:z1],[w0:w1]) of P1 x P1 over Q(i); each factor is normalized
// to [1:x] or [0:1].
struct BiProjPoint {
  std::array<GaussRational, 2> z{GaussRational(0), GaussRational(1)};
  std::array<GaussRational, 2> w{GaussRational(0), GaussRational(1)};

  static BiProjPoint make(std::array<GaussRational, 2> z, std::array<GaussRational, 2> w);
  std::string str() const;
  friend bool operator==(const BiProjPoint&, const BiProjPoint&) = default;
};

// Monomial coefficient * z0^z0_exp z1^(d1 - z0_exp) w0^w0_exp w1^(d2 - w0_exp).
struct BiProjTerm {
  int z0_exp = 0;
  int w0_exp = 0;
  GaussRational coefficient;
};

// Curve F = 0 in P1 x P1 cut out by a bihomogeneous form of bidegree (d1, d2).
class BiProjCurve {
public:
  // Merges repeated monomials. Throws InvalidArgument for exponents outside
  // the bidegree or when F is identically zero.
  BiProjCurve(int d1, int d2, std::vector<BiProjTerm> terms);

  // z0^4 (w0^2 + w1^2) + z1^4 (w0^2 - w1^2), the genus 3 curve of the Z4 example.
  static BiProjCurve paper_curve();
  // z0^4 f_k(w) + z1^4 g_k(w) with f_k, g_k products of k distinct linear
  // forms w0 - r w1, roots r from {i, -i, 2i, -2i} and {1, -1, 2, -2}.
  // Requires 1 <= k <= 4.
  static BiProjCurve ck_curve(int k);

  int d1() const noexcept { return d1_; }
  int d2() const noexcept { return d2_; }
  const std::vector<BiProjTerm>& terms() const noexcept { return terms_; }

  GaussRational operator()(const BiProjPoint& p) const;
  // dF/dz0, dF/dz1, dF/dw0, dF/dw1 at p.
  std::array<GaussRational, 4> gradient(const BiProjPoint& p) const;
  // F(z_fixed, [1:s]) as a polynomial in s.
  GaussPoly restrict_to_fiber(const std::array<GaussRational, 2>& z_fixed) const;

  std::string str() const;

private:
  int d1_;
  int d2_;
  std::vector<BiProjTerm> terms_;
};

// Roots in Q(i), with multiplicity, of a nonzero polynomial that splits into
// linear factors over Q(i). Throws IrreducibleFactor otherwise.
std::vector<GaussRational> gaussian_roots(const GaussPoly& p);

struct FixedPointDatum {
  BiProjPoint point;
  // Exponent of zeta_n by which the generator acts on the curve's tangent line.
  std::int64_t tangent_weight = 0;
};

// Fixed points on the curve of z -> [zeta z0 : z1], zeta = exp(2 pi i/n),
// n in {2, 4}. The curve must be invariant. Throws SingularPoint,
// IrreducibleFactor, or NonIsolatedFixedLocus when a fixed fiber lies in C.
std::vector<FixedPointDatum> fixed_points(const BiProjCurve& c, std::int64_t n = 4);

// 2 - 2g == |G|(2 - 2g') - sum (e_p - 1) over ramification points upstairs.
// Throws InvalidArgument when a stabilizer order does not divide |G|.
bool riemann_hurwitz_check(std::int64_t genus, std::int64_t group_order, std::int64_t quotient_genus,
                           const std::vector<std::int64_t>& stabilizer_orders);

// Fixed points of the element g^exponent with its tangent weights, written as
// exponents of the group's zeta_n.
struct ElementFixedData {
  std::int64_t exponent = 1;
  std::vector<std::pair<std::int64_t, std::int64_t>> weights;
};

struct QuotientInventory {
  std::int64_t group_order = 1;
  std::int64_t cover_chi = 0;
  std::int64_t cover_k2 = 0;
  std::int64_t cover_chi_o = 0;
  // Normalized singularity types with multiplicities, sorted by (r, q).
  std::vector<std::pair<CyclicQuotientType, std::int64_t>> types;
  // Generator weights at each fixed point, in enumeration order.
  std::vector<std::pair<std::int64_t, std::int64_t>> point_weights;
  // One entry per nontrivial element with fixed points.
  std::vector<ElementFixedData> elements;

  std::int64_t fixed_point_count() const { return static_cast<std::int64_t>(point_weights.size()); }
};

// Diagonal Z_n action on C1 x C2 with the given generator weights on each
// curve. Every nontrivial power fixes the same points as the generator,
// which holds for the action z -> [zeta z0 : z1].
QuotientInventory product_inventory(const std::vector<std::int64_t>& weights1, std::int64_t genus1,
                                    const std::vector<std::int64_t>& weights2, std::int64_t genus2,
                                    std::int64_t n = 4);
QuotientInventory product_inventory(const std::vector<FixedPointDatum>& points, std::int64_t genus,
                                    std::int64_t n = 4);

// chi(S/G) = (1/|G|) sum_g chi(Fix g). fixed_counts lists the nontrivial
// elements g, g^2, ... Throws NonIntegerResult.
std::int64_t burnside_euler(std::int64_t chi_cover, std::int64_t group_order,
                            const std::vector<std::int64_t>& fixed_counts);

struct LefschetzResult {
  // Contribution sum_p 1/((1 - zeta^a)(1 - zeta^b)) of each listed element.
  std::vector<GaussRational> contributions;
  GaussRational total;
  std::int64_t chi_o = 0;
};

// Holomorphic Lefschetz count of chi(O) on S/G, exact in Q(i); the group
// order must divide 4. Throws NonIntegralLefschetz, or InvalidArgument when
// a weight is not a unit modulo its element's order.
LefschetzResult holomorphic_lefschetz(std::int64_t chi_o_cover, std::int64_t group_order,
                                      const std::vector<ElementFixedData>& elements);

struct LocalResolution {
  CyclicQuotientType type;
  std::int64_t multiplicity = 0;
  TClassification classification;
  ResolutionData resolution;
};

struct QuotientResolution {
  std::vector<LocalResolution> local;
  std::int64_t chi_quotient = 0;
  Rational k2_quotient;
  std::int64_t delta_chi = 0;
  Rational delta_k2;
  std::int64_t chi = 0;
  std::int64_t c1sq = 0;
  LefschetzResult lefschetz;
  // sigma = c1^2 - 8 chi_h and sigma = (c1^2 - 2 chi)/3.
  std::int64_t sigma_lefschetz = 0;
  std::int64_t sigma_noether = 0;
  FourManifoldInvariants invariants{0, 0, 0};
};

using LocalResolver = std::function<ResolutionData(const CyclicQuotientType&)>;

// Minimal resolution of S/G: Burnside Euler number plus resolution deltas,
// K^2/|G| plus discrepancy deltas, chi_h from holomorphic Lefschetz. Throws
// NotClassT, or ConsistencyFailure when the two signature routes disagree.
QuotientResolution resolve_quotient(const QuotientInventory& inv, const LocalResolver& local = resolve);

struct CurveSummary {
  std::optional<BiProjCurve> curve;
  int bidegree_z = 4;
  int bidegree_w = 0;
  std::int64_t genus = 0;
  std::vector<FixedPointDatum> fixed;  // empty when only counts are known
  std::vector<std::int64_t> weights;
  bool riemann_hurwitz = false;
};

struct Z4Pipeline {
  CurveSummary first;
  CurveSummary second;
  QuotientInventory inventory;
  QuotientResolution resolution;
  std::optional<std::int64_t> elliptic_en;
};

// C x C / Z4 for the genus 3 curve C, resolved.
Z4Pipeline paper_z4_pipeline();
// C_k x C_l / Z4. Explicit coordinates for k, l <= 4; counts beyond.
Z4Pipeline ck_cl_pipeline(int k, int l);

}  // namespace rbd
