#pragma once

#include "json.hpp"
#include <optional>
#include <string>
#include <vector>

#include "thetarel/lattice.hpp"
#include "thetarel/taylor.hpp"

namespace thetarel::cli {

// User-facing description of one computation.
struct LatticeSpec {
  std::string name = "lattice";
  IntMatrix gram;
  long power = 1;
  std::optional<std::vector<RationalVector>> alphaReps;
  std::optional<std::vector<RationalVector>> betaReps;
  std::optional<Rational> cBound;  // honoured only with cBoundOverride
  bool cBoundOverride = false;
  int maxSum = 10;
  Rational truncation = 10;
  std::optional<long> nCap;
  std::optional<std::vector<MultiIndex>> p0;
};

LatticeSpec specFromJson(const nlohmann::json& j);
nlohmann::json specToJson(const LatticeSpec& s);
LatticeSpec loadSpec(const std::string& path);

// Names: d4, a2, a3, a2a2, binary15-3, binary15-5.
std::vector<std::string> builtinNames();
LatticeSpec builtinSpec(const std::string& name);

struct RepChange {
  RationalVector input;
  RationalVector normalized;
};

// Representatives actually used, plus what normalization did to each user-supplied one.
struct ResolvedReps {
  std::vector<RationalVector> alphas;
  std::vector<RationalVector> betas;
  bool alphasFromUser = false;
  bool betasFromUser = false;
  std::vector<RepChange> alphaLedger;
  std::vector<RepChange> betaLedger;
};

// Generates or validates the alpha/beta lists; InputError on incomplete or redundant user lists.
ResolvedReps resolveReps(const LatticeSpec& spec, const GramLattice& lattice);

Rational effectiveCBound(const LatticeSpec& spec, const GramLattice& lattice);

nlohmann::json rationalToJson(const Rational& r);
Rational rationalFromJson(const nlohmann::json& j);
nlohmann::json vectorToJson(const RationalVector& v);
RationalVector vectorFromJson(const nlohmann::json& j);

}  // namespace thetarel::cli
