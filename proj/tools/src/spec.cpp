#include "thetarel_cli/spec.hpp"

#include <fstream>

#include "thetarel/enumeration.hpp"
#include "thetarel/errors.hpp"

namespace thetarel::cli {

using nlohmann::json;

json rationalToJson(const Rational& r) {
  if (isIntegral(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

Rational rationalFromJson(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parseRational(j.get<std::string>());
  throw InputError("expected an integer or a rational string, got " + j.dump());
}

json vectorToJson(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rationalToJson(x));
  return a;
}

RationalVector vectorFromJson(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals, got " + j.dump());
  RationalVector v;
  for (const auto& x : j) v.push_back(rationalFromJson(x));
  return v;
}

namespace {

std::vector<RationalVector> vectorListFromJson(const json& j, std::size_t dim, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<RationalVector> out;
  for (const auto& e : j) {
    out.push_back(vectorFromJson(e));
    if (out.back().size() != dim) throw InputError(std::string(what) + " entry has the wrong length");
  }
  return out;
}

}  // namespace

LatticeSpec specFromJson(const json& j) {
  if (!j.is_object()) throw InputError("spec must be a JSON object");
  static const std::vector<std::string> known{"name",  "gram",          "power",   "alpha_reps", "beta_reps", "c_bound",
                                              "c_bound_override", "max_sum", "truncation", "n_cap", "p0"};
  for (const auto& [k, v] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end()) throw InputError("unknown spec field '" + k + "'");
  LatticeSpec s;
  if (j.contains("name")) s.name = j.at("name").get<std::string>();
  if (!j.contains("gram") || !j.at("gram").is_array() || j.at("gram").empty())
    throw InputError("spec needs a non-empty 'gram' matrix");
  const auto& g = j.at("gram");
  const std::size_t n = g.size();
  s.gram = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g[i].is_array() || g[i].size() != n) throw InputError("'gram' must be square");
    for (std::size_t k = 0; k < n; ++k) {
      if (!g[i][k].is_number_integer()) throw InputError("'gram' entries must be integers");
      s.gram(i, k) = g[i][k].get<long>();
    }
  }
  if (!j.contains("power") || !j.at("power").is_number_integer()) throw InputError("spec needs an integer 'power'");
  s.power = j.at("power").get<long>();
  if (s.power <= 0) throw InputError("'power' must be positive");
  if (j.contains("alpha_reps")) s.alphaReps = vectorListFromJson(j.at("alpha_reps"), n, "alpha_reps");
  if (j.contains("beta_reps")) s.betaReps = vectorListFromJson(j.at("beta_reps"), n, "beta_reps");
  if (j.contains("c_bound")) s.cBound = rationalFromJson(j.at("c_bound"));
  if (j.contains("c_bound_override")) s.cBoundOverride = j.at("c_bound_override").get<bool>();
  if (s.cBound && !s.cBoundOverride)
    throw InputError("'c_bound' is only accepted together with \"c_bound_override\": true");
  if (j.contains("max_sum")) s.maxSum = j.at("max_sum").get<int>();
  if (j.contains("truncation")) s.truncation = rationalFromJson(j.at("truncation"));
  if (j.contains("n_cap")) s.nCap = j.at("n_cap").get<long>();
  if (j.contains("p0")) {
    std::vector<MultiIndex> p0;
    for (const auto& p : j.at("p0")) {
      std::vector<int> e = p.get<std::vector<int>>();
      if (e.size() != n) throw InputError("p0 entry has the wrong length");
      p0.emplace_back(std::move(e));
    }
    s.p0 = std::move(p0);
  }
  return s;
}

json specToJson(const LatticeSpec& s) {
  json j;
  j["name"] = s.name;
  json g = json::array();
  for (std::size_t i = 0; i < s.gram.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < s.gram.cols(); ++k) row.push_back(s.gram(i, k).get_si());
    g.push_back(row);
  }
  j["gram"] = g;
  j["power"] = s.power;
  auto list = [](const std::vector<RationalVector>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(vectorToJson(v));
    return a;
  };
  if (s.alphaReps) j["alpha_reps"] = list(*s.alphaReps);
  if (s.betaReps) j["beta_reps"] = list(*s.betaReps);
  if (s.cBound) j["c_bound"] = rationalToJson(*s.cBound);
  if (s.cBoundOverride) j["c_bound_override"] = true;
  j["max_sum"] = s.maxSum;
  j["truncation"] = rationalToJson(s.truncation);
  if (s.nCap) j["n_cap"] = *s.nCap;
  if (s.p0) {
    json a = json::array();
    for (const auto& p : *s.p0) a.push_back(p.e);
    j["p0"] = a;
  }
  return j;
}

LatticeSpec loadSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("spec file '" + path + "' is not valid JSON: " + e.what());
  }
  try {
    return specFromJson(j);
  } catch (const json::exception& e) {
    throw InputError("spec file '" + path + "': " + e.what());
  }
}

std::vector<std::string> builtinNames() { return {"d4", "a2", "a3", "a2a2", "binary15-3", "binary15-5"}; }

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

LatticeSpec builtinSpec(const std::string& name) {
  LatticeSpec s;
  s.name = name;
  const Rational h = q(1, 2), t = q(1, 3), tt = q(2, 3);
  if (name == "d4") {
    s.gram = gramD4();
    s.power = 2;
    s.alphaReps = {{0, 0, 0, 0}, {0, 0, h, h}, {h, 0, 0, h}, {h, 0, h, 0}};
    s.betaReps = {{0, 0, 0, 0}, {h, h, h, h}, {h, 0, 0, 0}, {0, h, 0, 0}};
  } else if (name == "a2") {
    s.gram = gramA2();
    s.power = 3;
    s.alphaReps = {{0, 0}, {tt, t}, {t, tt}};
    s.betaReps = {{0, 0}, {t, t}, {tt, tt}};
  } else if (name == "a3") {
    s.gram = gramA3();
    s.power = 2;
    s.alphaReps = {{0, 0, 0}, {h, 0, h}};
    s.betaReps = {{0, 0, 0}, {0, h, 0}, {h, 0, 0}, {h, h, 0}};
  } else if (name == "a2a2") {
    s.gram = blockDiagonal(gramA2(), gramA2());
    s.power = 3;
    s.alphaReps = {{0, 0, 0, 0},   {0, 0, tt, t},   {0, 0, t, tt},  {tt, t, 0, 0},  {tt, t, tt, t},
                   {tt, t, t, tt}, {t, tt, 0, 0},   {t, tt, tt, t}, {t, tt, t, tt}};
    s.betaReps = {{0, 0, 0, 0},   {0, 0, t, t},    {0, 0, tt, tt}, {t, t, 0, 0},   {t, t, t, t},
                  {t, t, tt, tt}, {tt, tt, 0, 0},  {tt, tt, t, t}, {tt, tt, tt, tt}};
  } else if (name == "binary15-3") {
    s.gram = IntMatrix{{2, 1}, {1, 8}};
    s.power = 3;
    s.alphaReps = {{0, 0}, {t, t}, {tt, tt}};
    s.betaReps = {{0, 0}, {t, 0}, {tt, 0}};
    s.maxSum = 30;
    s.nCap = 2;
  } else if (name == "binary15-5") {
    s.gram = IntMatrix{{2, 1}, {1, 8}};
    s.power = 5;
    s.alphaReps = {{0, 0}, {q(1, 5), q(3, 5)}, {q(2, 5), q(1, 5)}, {q(3, 5), q(4, 5)}, {q(4, 5), q(2, 5)}};
    s.betaReps = {{0, 0}, {q(1, 5), 0}, {q(2, 5), 0}, {q(3, 5), 0}, {q(4, 5), 0}};
    s.maxSum = 50;
    s.nCap = 4;
  } else {
    throw InputError("unknown built-in spec '" + name + "'");
  }
  return s;
}

namespace {

template <class Same>
void checkPairwise(const std::vector<RationalVector>& reps, Same same, const char* what) {
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t k = 0; k < i; ++k)
      if (same(reps[i], reps[k]))
        throw InputError(std::string(what) + " " + toString(reps[i]) + " and " + toString(reps[k]) +
                         " lie in the same class");
}

}  // namespace

ResolvedReps resolveReps(const LatticeSpec& spec, const GramLattice& lattice) {
  ResolvedReps r;
  if (lattice.level() % spec.power != 0)
    throw InputError("power " + std::to_string(spec.power) + " does not divide the level " +
                     std::to_string(lattice.level()));
  std::vector<RationalVector> genAlpha;
  for (const auto& a : lattice.dualCosetReps())
    if (lattice.validateAlpha(a, spec.power)) genAlpha.push_back(a);
  const std::vector<RationalVector> genBeta = lattice.betaReps(spec.power);

  if (spec.alphaReps) {
    r.alphasFromUser = true;
    for (const auto& a : *spec.alphaReps) {
      if (!lattice.inDual(a)) throw InputError("alpha " + toString(a) + " is not in the dual lattice");
      if (!lattice.validateAlpha(a, spec.power))
        throw InputError("alpha " + toString(a) + " fails N'Q(alpha) in Z for N' = " + std::to_string(spec.power));
      r.alphaLedger.push_back({a, reduceModOne(a)});
    }
    checkPairwise(*spec.alphaReps, [&](const auto& x, const auto& y) { return lattice.equivalentModL(x, y); },
                  "alpha representatives");
    if (spec.alphaReps->size() != genAlpha.size())
      throw InputError("alpha list is incomplete: " + std::to_string(spec.alphaReps->size()) + " given, " +
                       std::to_string(genAlpha.size()) + " classes exist");
    for (const auto& c : r.alphaLedger) r.alphas.push_back(c.normalized);
  } else {
    r.alphas = genAlpha;
  }

  if (spec.betaReps) {
    r.betasFromUser = true;
    for (const auto& b : *spec.betaReps) {
      if (!lattice.inBetaGroup(b, spec.power))
        throw InputError("beta " + toString(b) + " is not in L# + L/" + std::to_string(spec.power));
      r.betaLedger.push_back({b, reduceModOne(b)});
    }
    checkPairwise(*spec.betaReps, [&](const auto& x, const auto& y) { return lattice.equivalentModDual(x, y); },
                  "beta representatives");
    if (spec.betaReps->size() != genBeta.size())
      throw InputError("beta list is incomplete: " + std::to_string(spec.betaReps->size()) + " given, " +
                       std::to_string(genBeta.size()) + " classes exist");
    for (const auto& c : r.betaLedger) r.betas.push_back(c.normalized);
  } else {
    r.betas = genBeta;
  }
  return r;
}

Rational effectiveCBound(const LatticeSpec& spec, const GramLattice& lattice) {
  if (spec.cBound && spec.cBoundOverride) {
    if (*spec.cBound <= 0) throw InputError("c_bound must be positive");
    return *spec.cBound;
  }
  return safeCBound(lattice);
}

}  // namespace thetarel::cli
