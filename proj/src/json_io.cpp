#include "walg/json_io.hpp"

namespace walg {

Json toJson(const Rat& r) { return r.str(); }

Json toJson(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json toJson(const SparseMat& m) {
  Json entries = Json::array();
  for (const auto& [rc, v] : m.entries())
    entries.push_back(Json::array({rc.first, rc.second, v.str()}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json toJson(const PBWContext& ctx, const NCPoly& p) {
  Json terms = Json::array();
  for (const auto& [w, c] : p.terms()) {
    Json factors = Json::array();
    for (int i : w) factors.push_back(ctx.label(i));
    terms.push_back(Json{{"coeff", c.str()}, {"word", factors}});
  }
  return terms;
}

Json toJson(const LieAlgebraData& g) {
  Json bracket = Json::array();
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      if (g.bracket[i][j].empty()) continue;
      Json terms = Json::array();
      for (const auto& [k, c] : g.bracket[i][j]) terms.push_back(Json::array({k, c.str()}));
      bracket.push_back(Json{{"i", i}, {"j", j}, {"terms", terms}});
    }
  return Json{{"type", std::string(1, g.typeTag)}, {"rank", g.rank},
              {"dim", g.dim},                       {"basisLabels", g.basisLabels},
              {"bracket", bracket},                 {"form", toJson(g.form)}};
}

Json toJson(const NilpotentSetup& s) {
  Json grading = Json::object();
  for (const auto& [w, vecs] : s.grading) {
    Json list = Json::array();
    for (const auto& v : vecs) list.push_back(toJson(v));
    grading[std::to_string(w)] = list;
  }
  Json y = Json::array();
  for (const auto& v : s.y) y.push_back(toJson(v));
  Json mBasis = Json::array();
  for (const auto& v : s.mBasis) mBasis.push_back(toJson(v));
  Json mChi = Json::array();
  for (const auto& c : s.mChi) mChi.push_back(c.str());
  Json dual = Json::array();
  for (const auto& v : s.sliceDual) dual.push_back(toJson(v));
  return Json{
      {"algebra", toJson(s.algebra)},
      {"triple", Json{{"e", toJson(s.triple.e)}, {"h", toJson(s.triple.h)}, {"f", toJson(s.triple.f)}}},
      {"hPrime", toJson(s.hPrime)},
      {"grading", grading},
      {"chi", toJson(s.chi)},
      {"y", y},
      {"m", Json{{"basis", mBasis}, {"chi", mChi}}},
      {"adapted", Json{{"labels", s.adaptedLabels}, {"weights", s.weightOf}, {"mDim", s.mDim}}},
      {"slice",
       Json{{"indices", s.sliceIdx}, {"degrees", s.sliceDegrees}, {"dual", dual}}}};
}

Json toJson(const WContext& ctx, const WPresentation& p) {
  Json gens = Json::array();
  for (int i = 0; i < p.genCount(); ++i)
    gens.push_back(Json{{"label", p.genLabels[i]},
                        {"degree", p.genDegrees[i]},
                        {"poly", toString(ctx.pbw, p.generators[i])},
                        {"terms", toJson(ctx.pbw, p.generators[i])}});
  Json graded = Json::object();
  for (const auto& [k, d] : p.gradedDims) graded[std::to_string(k)] = d;
  Json products = Json::array();
  for (const auto& [pair, expr] : p.products) {
    Json terms = Json::array();
    for (const auto& [expo, c] : expr)
      terms.push_back(Json{{"monomial", expo}, {"coeff", c.str()}});
    products.push_back(Json{{"i", pair.first}, {"j", pair.second}, {"terms", terms}});
  }
  return Json{{"N", p.truncation},
              {"gradedDims", graded},
              {"generators", gens},
              {"structureConsts", products}};
}

Json toJson(const GradedIdeal& ideal) {
  Json basis = Json::array();
  for (const auto& b : ideal.basis) basis.push_back(b.str(ideal.varNames));
  return Json{{"variables", ideal.varNames},
              {"weights", ideal.order.weights},
              {"orderTag", ideal.order.lex ? "lex" : "wdegrevlex"},
              {"basis", basis}};
}

Json toJson(const VarietyReport& rep) {
  return Json{
      {"status", rep.status == VarietyReport::Status::Exact ? "exact" : "inconclusive"},
      {"dimension", rep.dimension},
      {"multiplicity", rep.multiplicity.str()},
      {"multiplicityLocalizationChecked", rep.multiplicityIsLocalizationChecked},
      {"componentIdeal", rep.componentIdeal}};
}

Json toJson(const CharacterSearch& search, const std::vector<std::string>& genLabels) {
  const char* status = nullptr;
  switch (search.status) {
    case CharacterSearch::Status::AllScalars: status = "all-scalars"; break;
    case CharacterSearch::Status::Solved: status = "solved"; break;
    case CharacterSearch::Status::IrrationalOnly: status = "irrational-only"; break;
    case CharacterSearch::Status::NoCharacters: status = "no-characters"; break;
    case CharacterSearch::Status::Inconclusive: status = "inconclusive"; break;
  }
  Json freeGens = Json::array();
  for (int i : search.freeGenerators) freeGens.push_back(genLabels[i]);
  Json chars = Json::array();
  for (const auto& chi : search.characters) {
    Json values = Json::object();
    for (const auto& [i, v] : chi.values) values[genLabels[i]] = v.str();
    chars.push_back(Json{{"values", values}});
  }
  Json rels = Json::array();
  for (const auto& r : search.relations) rels.push_back(r.str(genLabels));
  return Json{{"status", status},
              {"freeGenerators", freeGens},
              {"characters", chars},
              {"definingPolynomials", search.defining},
              {"relations", rels}};
}

Json toJson(const SkryabinReport& rep) {
  return Json{{"degreeBound", rep.degreeBound},
              {"truncationDims", rep.truncationDims},
              {"annihilatorDims", rep.annihilatorDims},
              {"locallyNilpotent", rep.locallyNilpotent},
              {"stabilized", rep.stabilized},
              {"stableAnnihilatorDim", rep.stableAnnihilatorDim}};
}

}  // namespace walg
