#ifndef WALG_JSON_IO_HPP
#define WALG_JSON_IO_HPP

#include <json.hpp>

#include "walg/groebner.hpp"
#include "walg/reps.hpp"
#include "walg/setup.hpp"
#include "walg/whittaker.hpp"

namespace walg {

using Json = nlohmann::ordered_json;

Json toJson(const Rat& r);
Json toJson(const Vec& v);
Json toJson(const SparseMat& m);
Json toJson(const PBWContext& ctx, const NCPoly& p);  // array-of-terms schema
Json toJson(const LieAlgebraData& g);
Json toJson(const NilpotentSetup& s);
Json toJson(const WContext& ctx, const WPresentation& p);
Json toJson(const GradedIdeal& ideal);
Json toJson(const VarietyReport& rep);
Json toJson(const CharacterSearch& search, const std::vector<std::string>& genLabels);
Json toJson(const SkryabinReport& rep);

}  // namespace walg

#endif
