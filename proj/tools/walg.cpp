#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "walg/errors.hpp"
#include "walg/json_io.hpp"
#include "walg/rees.hpp"
#include "walg/version.hpp"

using namespace walg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct RunConfig {
  std::string type = "A";
  int rank = 1;
  std::string partition;
  std::string nilpotentCsv;
  std::string matrixSpec;
  std::string hprimeCsv;
  int truncation = 8;
  std::uint64_t seed = 0;
  std::string outPath;
  bool pretty = false;
};

std::vector<std::string> splitOn(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

Vec parseRatCsv(const std::string& csv, int expect, const std::string& what) {
  auto parts = splitOn(csv, ',');
  if (expect >= 0 && static_cast<int>(parts.size()) != expect) {
    std::ostringstream os;
    os << what << ": expected " << expect << " entries, got " << parts.size();
    throw UsageError(os.str());
  }
  Vec out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    try {
      out.push_back(Rat::parse(parts[i]));
    } catch (const UsageError&) {
      std::ostringstream os;
      os << what << ": entry " << (i + 1) << " ('" << parts[i] << "') is not a rational";
      throw UsageError(os.str());
    }
  }
  return out;
}

std::vector<int> parseIntCsv(const std::string& csv, const std::string& what) {
  std::vector<int> out;
  for (const auto& p : splitOn(csv, ',')) {
    try {
      out.push_back(static_cast<int>(Rat::parse(p).toLong()));
    } catch (const UsageError&) {
      throw UsageError(what + ": '" + p + "' is not an integer");
    }
  }
  return out;
}

Vec nilpotentFromConfig(const RunConfig& cfg, const LieAlgebraData& g) {
  int sources = (!cfg.partition.empty()) + (!cfg.nilpotentCsv.empty()) + (!cfg.matrixSpec.empty());
  if (sources != 1)
    throw UsageError("exactly one of --partition, --nilpotent, --matrix is required");
  if (!cfg.partition.empty())
    return partitionNilpotent(g, parseIntCsv(cfg.partition, "--partition"));
  if (!cfg.nilpotentCsv.empty())
    return parseRatCsv(cfg.nilpotentCsv, g.dim, "--nilpotent");
  // --matrix "r,c,v;r,c,v" with 1-based indices in the defining rep
  std::vector<Vec> mat(g.repDim, Vec(g.repDim, Rat(0)));
  for (const auto& entry : splitOn(cfg.matrixSpec, ';')) {
    auto parts = splitOn(entry, ',');
    if (parts.size() != 3) throw UsageError("--matrix: entries must be r,c,value triples");
    int r = static_cast<int>(Rat::parse(parts[0]).toLong());
    int c = static_cast<int>(Rat::parse(parts[1]).toLong());
    if (r < 1 || r > g.repDim || c < 1 || c > g.repDim)
      throw UsageError("--matrix: index out of range");
    mat[r - 1][c - 1] = Rat::parse(parts[2]);
  }
  return coordinatizeMatrix(g, mat);
}

NilpotentSetup setupFromConfig(const RunConfig& cfg) {
  if (cfg.type.size() != 1) throw UsageError("--type must be one of A, B, C, D");
  auto g = buildClassical(cfg.type[0], cfg.rank);
  Vec e = nilpotentFromConfig(cfg, g);
  auto triple = jacobsonMorozov(g, e);
  std::optional<Vec> hPrime;
  if (!cfg.hprimeCsv.empty()) hPrime = parseRatCsv(cfg.hprimeCsv, g.dim, "--hprime");
  return buildSetup(g, triple, hPrime);
}

Json envelope(const RunConfig& cfg, const std::string& claim) {
  Json config{{"type", cfg.type}, {"rank", cfg.rank}};
  if (!cfg.partition.empty()) config["partition"] = cfg.partition;
  if (!cfg.nilpotentCsv.empty()) config["nilpotent"] = cfg.nilpotentCsv;
  if (!cfg.matrixSpec.empty()) config["matrix"] = cfg.matrixSpec;
  if (!cfg.hprimeCsv.empty()) config["hPrime"] = cfg.hprimeCsv;
  config["N"] = cfg.truncation;
  return Json{{"schemaVersion", kSchemaVersion},
              {"tool", Json{{"name", kToolName}, {"version", kToolVersion}}},
              {"seed", cfg.seed},
              {"claim", claim},
              {"config", config}};
}

void emit(const RunConfig& cfg, const Json& artifact) {
  std::string text = cfg.pretty ? artifact.dump(2) : artifact.dump();
  text.push_back('\n');
  if (cfg.outPath.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.outPath, std::ios::binary);
    if (!out) throw UsageError("cannot open output path " + cfg.outPath);
    out << text;
  }
}

void applyDegreeCap(RunConfig& cfg) {
  const char* cap = std::getenv("WALG_MAX_DEGREE");
  if (!cap) return;
  int c = std::atoi(cap);
  if (c > 0 && cfg.truncation > c) cfg.truncation = c;
}

int runSetup(RunConfig cfg) {
  auto s = setupFromConfig(cfg);
  Json art = envelope(cfg, "nilpotent-setup-data");
  art["setup"] = toJson(s);
  emit(cfg, art);
  return kExitPass;
}

int runWalg(RunConfig cfg) {
  auto s = setupFromConfig(cfg);
  auto w = WAlgebra::build(WContext(std::move(s)), cfg.truncation);
  Json art = envelope(cfg, "truncated-presentation");
  art["presentation"] = toJson(w.context(), w.presentation());
  emit(cfg, art);
  return kExitPass;
}

int runVerifyGr(RunConfig cfg) {
  auto s = setupFromConfig(cfg);
  WContext ctx(std::move(s));
  auto wb = whittakerBasis(ctx, cfg.truncation);
  // expected cumulative dimensions of the slice coordinate ring
  const auto& degs = ctx.setup.sliceDegrees;
  std::vector<long> expected(cfg.truncation + 1, 0);
  {
    std::vector<int> cur(degs.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos, int deg) -> void {
      if (pos == degs.size()) {
        expected[deg] += 1;
        return;
      }
      for (int e = 0;; ++e) {
        int d = deg + e * degs[pos];
        if (d > cfg.truncation) break;
        self(self, pos + 1, d);
      }
    };
    rec(rec, 0, 0);
  }
  bool pass = true;
  Json perDegree = Json::array();
  long cumulative = 0;
  for (int k = 0; k <= cfg.truncation; ++k) {
    cumulative += expected[k];
    long got = 0;
    for (int t : wb.topDegrees)
      if (t <= k) ++got;
    if (got != cumulative) pass = false;
    perDegree.push_back(Json{{"k", k}, {"dimFiltration", got}, {"dimSliceRing", cumulative}});
  }
  Json art = envelope(cfg, "graded-dimension-match");
  art["perDegree"] = perDegree;
  art["pass"] = pass;
  emit(cfg, art);
  return pass ? kExitPass : kExitMathFailure;
}

int runChars(RunConfig cfg) {
  auto s = setupFromConfig(cfg);
  auto w = WAlgebra::build(WContext(std::move(s)), cfg.truncation);
  auto search = findCharacters(w.presentation());
  Json art = envelope(cfg, "one-dimensional-characters");
  art["characters"] = toJson(search, w.presentation().genLabels);
  emit(cfg, art);
  if (search.status == CharacterSearch::Status::Inconclusive) return kExitInconclusive;
  return kExitPass;
}

int runIdealDagger(RunConfig cfg, const std::string& gensSpec, const std::string& traceSpec,
                   int hilbertBound) {
  auto s = setupFromConfig(cfg);
  std::vector<Poly> gens;
  if (!gensSpec.empty()) {
    for (const auto& text : splitOn(gensSpec, ';'))
      gens.push_back(parsePoly(s.algebra.basisLabels, text));
  }
  if (!traceSpec.empty()) {
    for (int k : parseIntCsv(traceSpec, "--trace-gens"))
      gens.push_back(traceSymbol(s.algebra, k));
  }
  if (gens.empty()) throw UsageError("ideal-dagger: provide --gens or --trace-gens");
  auto restricted = sliceRestrict(s, gens);
  auto variety = varietyReport(restricted, hilbertBound);

  Json inputs = Json::array();
  for (const auto& g : gens) inputs.push_back(g.str(s.algebra.basisLabels));
  Json art = envelope(cfg, "slice-restriction-multiplicity");
  art["input"] = Json{{"generators", inputs}};
  art["restricted"] = toJson(restricted);
  art["variety"] = toJson(variety);
  emit(cfg, art);
  if (variety.status == VarietyReport::Status::Inconclusive) return kExitInconclusive;
  return kExitPass;
}

int runSkryabin(RunConfig cfg, const std::string& charCsv, const std::string& moduleJson,
                int degree) {
  auto s = setupFromConfig(cfg);
  auto w = WAlgebra::build(WContext(std::move(s)), cfg.truncation);
  const auto& pres = w.presentation();
  FinModule m;
  if (!charCsv.empty() && !moduleJson.empty())
    throw UsageError("skryabin: give either --char or --module-json, not both");
  if (!charCsv.empty()) {
    Vec values = parseRatCsv(charCsv, pres.genCount(), "--char");
    Character chi;
    for (int i = 0; i < pres.genCount(); ++i) chi.values[i] = values[i];
    m = FinModule::fromCharacter(pres, chi);
  } else if (!moduleJson.empty()) {
    Json j = Json::parse(moduleJson, nullptr, true);
    m.dim = j.at("dim").get<int>();
    for (const auto& mat : j.at("actions")) {
      std::vector<Vec> rows;
      for (const auto& row : mat) {
        Vec r;
        for (const auto& x : row) r.push_back(Rat::parse(x.get<std::string>()));
        rows.push_back(std::move(r));
      }
      m.actions.push_back(std::move(rows));
    }
  } else {
    throw UsageError("skryabin: provide --char or --module-json");
  }
  auto moduleCheck = verifyModule(pres, m);
  if (!moduleCheck.pass) {
    Json art = envelope(cfg, "whittaker-module-truncation");
    art["moduleValid"] = false;
    art["firstViolation"] = moduleCheck.firstViolation;
    art["pass"] = false;
    emit(cfg, art);
    return kExitMathFailure;
  }
  auto rep = skryabinTruncated(w, m, degree);
  bool pass = rep.locallyNilpotent && rep.stabilized && rep.stableAnnihilatorDim == m.dim;
  Json art = envelope(cfg, "whittaker-module-truncation");
  art["moduleValid"] = true;
  art["module"] = Json{{"dim", m.dim}};
  art["report"] = toJson(rep);
  art["pass"] = pass;
  emit(cfg, art);
  if (!rep.stabilized) return kExitInconclusive;
  return pass ? kExitPass : kExitMathFailure;
}

int runStarCheck(RunConfig cfg, int vars, int degree, int trials, bool corruptBivector) {
  if (vars < 2 || vars % 2 != 0)
    throw UsageError("star-check: --vars must be a positive even number");
  StarContext ctx = makeStandardSymplectic(vars / 2);
  if (corruptBivector) ctx.bivector[1][0] = Rat(1);

  auto assoc = checkAssociativity(ctx, degree, trials, cfg.seed);
  auto homog = checkHomogeneity(ctx, std::min(degree, 3));
  WeylReport weyl = weylIdentify(ctx);

  // comoment suite on one symplectic pair with the defining sl2 action
  auto sl2 = buildClassical('A', 1);
  StarContext pairCtx = makeStandardSymplectic(1);
  LinearAction action;
  for (int i = 0; i < sl2.dim; ++i) {
    std::vector<std::vector<Rat>> matrix(2, std::vector<Rat>(2, Rat(0)));
    for (const auto& [rc, v] : sl2.repBasis[i].entries()) matrix[rc.first][rc.second] = v;
    action.matrices.push_back(std::move(matrix));
  }
  action.bracket = sl2.bracket;
  auto cm = quantumComoment(pairCtx, action);
  auto comoment = checkComoment(pairCtx, action, cm, 5);

  bool pass = assoc.pass && homog.pass && weyl.check.pass && comoment.pass;
  Json gram = Json::array();
  for (const auto& row : weyl.gram) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.str());
    gram.push_back(r);
  }
  Json art = envelope(cfg, "flat-star-product-suite");
  art["associativity"] = Json{{"trials", trials}, {"degree", degree}, {"pass", assoc.pass},
                              {"detail", assoc.detail}};
  art["homogeneity"] = Json{{"pass", homog.pass}, {"detail", homog.detail}};
  art["weyl"] = Json{{"pass", weyl.check.pass}, {"detail", weyl.check.detail}, {"gram", gram}};
  art["comoment"] = Json{{"pass", comoment.pass}, {"detail", comoment.detail}};
  art["pass"] = pass;
  emit(cfg, art);
  return pass ? kExitPass : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite W-algebra toolkit"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--type", cfg.type, "algebra type: A, B, C or D");
  app.add_option("--rank", cfg.rank, "algebra rank");
  app.add_option("--partition", cfg.partition, "Jordan partition (type A nilpotents)");
  app.add_option("--nilpotent", cfg.nilpotentCsv, "nilpotent as basis coordinates");
  app.add_option("--matrix", cfg.matrixSpec, "nilpotent as defining-rep entries r,c,v;...");
  app.add_option("--hprime", cfg.hprimeCsv, "grading element override, basis coordinates");
  app.add_option("--N", cfg.truncation, "truncation degree");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--out", cfg.outPath, "artifact output path (default stdout)");
  bool jsonFlag = false;
  app.add_flag("--json", jsonFlag, "compact JSON artifact (the default)");
  app.add_flag("--pretty", cfg.pretty, "indented artifact rendering");

  auto* setupCmd = app.add_subcommand("setup", "emit the nilpotent setup data");
  auto* walgCmd = app.add_subcommand("walg", "emit the truncated W-algebra presentation");
  auto* verifyCmd = app.add_subcommand("verify-gr", "check graded dimensions against the slice ring");
  auto* charsCmd = app.add_subcommand("chars", "search one-dimensional characters");

  auto* idealCmd = app.add_subcommand("ideal-dagger", "slice restriction and multiplicity");
  std::string gensSpec, traceSpec;
  int hilbertBound = 16;
  idealCmd->add_option("--gens", gensSpec, "ideal generators over basis labels, ';' separated");
  idealCmd->add_option("--trace-gens", traceSpec, "use trace invariants tr(x^k), CSV of k");
  idealCmd->add_option("--hilbert-bound", hilbertBound, "degree bound for Hilbert data");

  auto* skryCmd = app.add_subcommand("skryabin", "truncated Whittaker module checks");
  std::string charCsv, moduleJson;
  int skryDegree = 6;
  skryCmd->add_option("--char", charCsv, "one-dimensional module: generator values CSV");
  skryCmd->add_option("--module-json", moduleJson, "module as JSON {dim, actions}");
  skryCmd->add_option("--degree", skryDegree, "truncation degree of the module model");

  auto* starCmd = app.add_subcommand("star-check", "flat star-product verification suite");
  int starVars = 4, starDegree = 6, starTrials = 50;
  bool corrupt = false;
  starCmd->add_option("--vars", starVars, "number of variables (even)");
  starCmd->add_option("--degree", starDegree, "sample polynomial degree");
  starCmd->add_option("--trials", starTrials, "random associativity trials");
  starCmd->add_flag("--corrupt-bivector", corrupt, "negative control: break antisymmetry");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    applyDegreeCap(cfg);
    if (setupCmd->parsed()) return runSetup(cfg);
    if (walgCmd->parsed()) return runWalg(cfg);
    if (verifyCmd->parsed()) return runVerifyGr(cfg);
    if (charsCmd->parsed()) return runChars(cfg);
    if (idealCmd->parsed()) return runIdealDagger(cfg, gensSpec, traceSpec, hilbertBound);
    if (skryCmd->parsed()) return runSkryabin(cfg, charCsv, moduleJson, skryDegree);
    if (starCmd->parsed()) return runStarCheck(cfg, starVars, starDegree, starTrials, corrupt);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const Json::parse_error& e) {
    std::cerr << "usage error: bad JSON input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  }
}
