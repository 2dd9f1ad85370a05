#pragma once

#include "json.hpp"

#include "alcove/alcove_aut.hpp"
#include "alcove/fundcheck.hpp"
#include "alcove/polytope.hpp"
#include "alcove/root_system.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

using nlohmann::json;

// Rationals serialize as "p/q" strings (plain "p" for integers); never floats.
json to_json(const Rational& r);
json to_json(const RatVec& v);
json to_json(const RatMat& m);
RatVec ratvec_from_json(const json& j);
RatMat ratmat_from_json(const json& j);

json to_json(const RootSystem& rs);
json to_json(const AffineIsometry& a);
AffineIsometry isometry_from_json(const json& j);
json to_json(const RootSystem& rs, const HalfSpace& h);
json to_json(const RootSystem& rs, const HPolytope& p);
json to_json(const RootSystem& rs, const VPolytope& vp);
json to_json(const FundamentalGroup& g);
json to_json(const AlcoveAutGroup& g);
json to_json(const RootSystem& rs, const GroupAction& g, const StratificationReport& rep);
json to_json(const FundamentalDomainReport& rep);

// The per-type golden document: fundamental group and alcove isometry group
// with elements as node permutations, multiplication tables and generators.
json group_fixture(const RootSystem& rs);

}  // namespace alcove
