#pragma once

// JSON renderings shared by the CLI, the scenario runner and the Python
// module. Rational values are always strings ("a/b", or "a" when integral).

#include <json.hpp>

#include "rbd/hj.hpp"
#include "rbd/plumbing.hpp"
#include "rbd/quotients.hpp"
#include "rbd/singularities.hpp"
#include "rbd/smoothing.hpp"
#include "rbd/surfaces.hpp"
#include "rbd/surgery.hpp"
#include "rbd/symmatrix.hpp"

namespace rbd {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const GaussRational& z);
Json to_json(const HJString& s);
Json to_json(const LensSpace& l);
Json to_json(const Inertia& in);
Json to_json(const SymMatrix& m);
Json to_json(const CyclicQuotientType& t);
Json to_json(const TClassification& c);
Json to_json(const ResolutionData& r);
Json to_json(const FourManifoldInvariants& m);
Json to_json(const HirzebruchClass& x);
Json to_json(const NoetherCheck& n);
Json to_json(const GeographyReport& g);
Json to_json(const BiProjPoint& p);
Json to_json(const QuotientInventory& inv);
Json to_json(const QuotientResolution& r);
Json to_json(const Z4Pipeline& z);
Json to_json(const SmoothingReport& r);

// Command payloads.
Json hj_expand_report(std::int64_t m, std::int64_t q);
Json hj_cpq_report(std::int64_t p, std::int64_t q);
Json sing_classify_report(std::int64_t r, std::int64_t a, std::int64_t b);
Json sing_resolve_report(std::int64_t r, std::int64_t q);
Json plumbing_report(const PlumbingGraph& g);
Json double_cover_report(std::int64_t e, std::int64_t a, std::int64_t b);
Json en_report(const FourManifoldInvariants& m);
Json blowdown_report(const FourManifoldInvariants& m, const BlowdownPlan& plan);
Json w4n_report(std::int64_t n);
Json smoothing_json(const TFamilySpec& spec);

}  // namespace rbd
