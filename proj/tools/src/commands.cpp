#include "thetarel_cli/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "thetarel/enumeration.hpp"
#include "thetarel/errors.hpp"
#include "thetarel/linalg.hpp"
#include "thetarel/p0search.hpp"
#include "thetarel/qseries.hpp"

namespace thetarel::cli {

using nlohmann::json;

std::string latticeHash(const IntMatrix& gram) {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
  };
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) feed(gram(i, j).get_str() + ",");
    feed(";");
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

json cyclotomicToJson(const Cyclotomic& c) {
  json coeffs = json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(rationalToJson(x));
  return json{{"order", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomicFromJson(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw InputError("cyclotomic value needs 'order' and 'coeffs'");
  const long order = j.at("order").get<long>();
  if (order <= 0) throw InputError("cyclotomic order must be positive");
  std::vector<Rational> cs;
  for (const auto& x : j.at("coeffs")) cs.push_back(rationalFromJson(x));
  Cyclotomic c(static_cast<unsigned>(order), cs);
  if (cs.size() != c.degree()) throw InputError("cyclotomic coefficient count does not match the order");
  return c;
}

P0Stage runP0Stage(const LatticeSpec& spec, const GramLattice& lattice, const Rational& c) {
  P0Stage st;
  const GramLattice rescaled = lattice.rescaled(spec.power);
  const Rational cr = c / spec.power;  // Q scales by N' under rescaling
  if (spec.p0) {
    st.supplied = true;
    st.p0 = *spec.p0;
    const std::size_t d = rescaled.det().get_ui();
    if (st.p0.size() != d) throw InputError("supplied p0 must have exactly det(N'G) = " + std::to_string(d) + " elements");
    // the nonzero members must give a nonsingular bp matrix
    BpTable table(rescaled, cr);
    IntegerEchelonBasis basis(table.columns());
    for (std::size_t i = 1; i < st.p0.size(); ++i) {
      auto row = table.row(st.p0[i]);
      BigInt den = lcmOfDenominators(row);
      std::vector<BigInt> ir;
      for (const auto& x : row) ir.emplace_back(x * den);
      basis.add(std::move(ir));
    }
    if (basis.rank() + 1 != d)
      throw SearchError("supplied p0 gives rank " + std::to_string(basis.rank()) + " instead of " + std::to_string(d - 1),
                        basis.rank(), d - 1);
  } else {
    P0SearchOptions opts;
    opts.maxSum = spec.maxSum;
    opts.c = cr;
    P0Result res = findP0(rescaled, opts);
    st.p0 = res.p0;
    st.candidatesTried = res.candidatesTried;
  }
  st.hat = hatClosure(st.p0);
  st.index = buildIndexSet(st.hat, lattice.level(), spec.power, lattice.dim(), spec.nCap);
  return st;
}

RelationsResult computeRelations(const LatticeSpec& spec, const GramLattice& lattice, unsigned threads) {
  RelationsResult r;
  r.reps = resolveReps(spec, lattice);
  r.c = effectiveCBound(spec, lattice);
  r.p0 = runP0Stage(spec, lattice, r.c);
  ThetaBuilder builder(lattice, spec.power, r.p0.index, r.c);
  r.thetas = builder.build(r.reps.alphas, r.reps.betas, threads);
  r.report = findRelations(r.thetas);
  return r;
}

namespace {

std::string coefficientText(const Cyclotomic& c) {
  if (c.isRational()) return c.constantTerm().get_str();
  return "(" + c.toString() + ")";
}

std::string gramText(const IntMatrix& g) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < g.rows(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < g.cols(); ++j) os << (j ? "," : "") << g(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

json repsJson(const std::vector<RationalVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vectorToJson(v));
  return a;
}

json ledgerJson(const std::vector<RepChange>& changes) {
  json a = json::array();
  for (const auto& c : changes)
    a.push_back({{"input", vectorToJson(c.input)},
                 {"normalized", vectorToJson(c.normalized)},
                 {"changed", c.input != c.normalized}});
  return a;
}

json latticeJson(const LatticeSpec& spec, const GramLattice& lattice) {
  json g = json::array();
  for (std::size_t i = 0; i < lattice.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < lattice.dim(); ++j) row.push_back(lattice.gram()(i, j).get_si());
    g.push_back(row);
  }
  json inv = json::array();
  for (const auto& d : lattice.smith().invariants) inv.push_back(d.get_si());
  return json{{"name", spec.name},       {"gram", g},
              {"hash", latticeHash(lattice.gram())},
              {"dim", lattice.dim()},    {"det", lattice.det().get_si()},
              {"level", lattice.level()}, {"invariant_factors", inv}};
}

json indicesJson(const std::vector<MultiIndex>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.e);
  return a;
}

}  // namespace

std::string formatRelation(const Relation& r, const std::vector<ThetaVector>& thetas, long power) {
  std::ostringstream os;
  os << thetaName(thetas[r.dependent].label, power) << " =";
  bool first = true;
  for (std::size_t i = 0; i < r.basis.size(); ++i) {
    const Cyclotomic& c = r.coefficients[i];
    if (c.isZero()) continue;
    const std::string name = thetaName(thetas[r.basis[i]].label, power);
    if (c.isRational() && (c.constantTerm() == 1 || c.constantTerm() == -1)) {
      const bool neg = c.constantTerm() < 0;
      os << (first ? (neg ? " -" : "") : (neg ? " - " : " + ")) << (first ? " " : "") << name;
    } else {
      os << (first ? " " : " + ") << coefficientText(c) << "*" << name;
    }
    first = false;
  }
  if (first) os << " 0";
  return os.str();
}

json infoJson(const LatticeSpec& spec, const GramLattice& lattice) {
  json j;
  j["lattice"] = latticeJson(spec, lattice);
  j["power"] = spec.power;
  j["delta_level"] = deltaLevel(lattice.level());
  j["safe_c_bound"] = rationalToJson(safeCBound(lattice));
  j["c_bound"] = rationalToJson(effectiveCBound(spec, lattice));
  j["c_bound_source"] = (spec.cBound && spec.cBoundOverride) ? "override" : "safe";
  j["dual_coset_reps"] = repsJson(lattice.dualCosetReps());
  ResolvedReps reps = resolveReps(spec, lattice);
  j["alpha_reps"] = repsJson(reps.alphas);
  j["beta_reps"] = repsJson(reps.betas);
  j["normalization"] = {{"alpha", ledgerJson(reps.alphaLedger)}, {"beta", ledgerJson(reps.betaLedger)}};
  return j;
}

json relationsJson(const LatticeSpec& spec, const GramLattice& lattice, const RelationsResult& r) {
  json j;
  j["lattice"] = latticeJson(spec, lattice);
  j["power"] = spec.power;
  j["weight"] = HalfInteger::fromTwice(spec.power * static_cast<long>(lattice.dim())).toString();
  j["c_bound"] = rationalToJson(r.c);
  j["c_bound_source"] = (spec.cBound && spec.cBoundOverride) ? "override" : "safe";
  j["alpha_reps"] = repsJson(r.reps.alphas);
  j["beta_reps"] = repsJson(r.reps.betas);
  j["normalization"] = {{"alpha", ledgerJson(r.reps.alphaLedger)}, {"beta", ledgerJson(r.reps.betaLedger)}};
  j["p0"] = indicesJson(r.p0.p0);
  j["p0_supplied"] = r.p0.supplied;
  j["p0_hat_size"] = r.p0.hat.size();
  j["index_size"] = r.p0.index.size();
  if (spec.nCap) j["n_cap"] = *spec.nCap;
  json thetas = json::array();
  for (const auto& t : r.thetas) {
    json entries = json::array();
    for (const auto& e : t.entries) entries.push_back(cyclotomicToJson(e));
    thetas.push_back({{"alpha", vectorToJson(t.label.alpha)},
                      {"beta", vectorToJson(t.label.beta)},
                      {"name", thetaName(t.label, spec.power)},
                      {"entries", entries}});
  }
  j["thetas"] = thetas;
  j["rank"] = r.report.rank();
  j["independent"] = r.report.independent;
  json rels = json::array();
  for (const auto& rel : r.report.relations) {
    json terms = json::array();
    for (std::size_t i = 0; i < rel.basis.size(); ++i)
      if (!rel.coefficients[i].isZero())
        terms.push_back({{"index", rel.basis[i]}, {"coefficient", cyclotomicToJson(rel.coefficients[i])}});
    rels.push_back({{"dependent", rel.dependent}, {"terms", terms}, {"text", formatRelation(rel, r.thetas, spec.power)}});
  }
  j["relations"] = rels;
  return j;
}

namespace {

void writeJson(const json& j, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << j.dump(2) << '\n';
}

void printLatticeHeader(std::ostream& out, const LatticeSpec& spec, const GramLattice& lattice) {
  out << "lattice " << spec.name << "  gram " << gramText(lattice.gram()) << "\n";
  out << "dim " << lattice.dim() << "  det " << lattice.det().get_str() << "  level " << lattice.level()
      << "  power " << spec.power << "\n";
}

int cmdInfo(const LatticeSpec& spec, std::ostream& out, const std::string& outPath) {
  GramLattice lattice(spec.gram);
  json j = infoJson(spec, lattice);
  printLatticeHeader(out, spec, lattice);
  out << "invariant factors " << j["lattice"]["invariant_factors"].dump() << "  delta_N "
      << deltaLevel(lattice.level()) << "\n";
  out << "dual coset reps (" << lattice.dualCosetReps().size() << "):";
  for (const auto& d : lattice.dualCosetReps()) out << ' ' << toString(d);
  out << "\n";
  out << "c bound " << toString(effectiveCBound(spec, lattice)) << " (" << j["c_bound_source"].get<std::string>()
      << "), safe bound " << toString(safeCBound(lattice)) << "\n";
  out << "alpha reps (" << j["alpha_reps"].size() << "):";
  ResolvedReps reps = resolveReps(spec, lattice);
  for (const auto& a : reps.alphas) out << ' ' << toString(a);
  out << "\nbeta reps (" << reps.betas.size() << "):";
  for (const auto& b : reps.betas) out << ' ' << toString(b);
  out << "\n";
  if (!outPath.empty()) writeJson(j, outPath);
  return kOk;
}

int cmdFindP0(const LatticeSpec& spec, std::ostream& out, const std::string& outPath) {
  GramLattice lattice(spec.gram);
  const Rational c = effectiveCBound(spec, lattice);
  P0Stage st = runP0Stage(spec, lattice, c);
  printLatticeHeader(out, spec, lattice);
  out << "P0 (" << st.p0.size() << (st.supplied ? ", supplied" : "") << "):";
  for (const auto& p : st.p0) out << ' ' << p.toString();
  out << "\nhat closure " << st.hat.size() << "  index set " << st.index.size() << "\n";
  if (!outPath.empty()) {
    json j{{"lattice", latticeJson(spec, lattice)},
           {"power", spec.power},
           {"p0", indicesJson(st.p0)},
           {"p0_hat", indicesJson(st.hat)},
           {"index_size", st.index.size()}};
    writeJson(j, outPath);
  }
  return kOk;
}

int cmdRelations(const LatticeSpec& spec, unsigned threads, std::ostream& out, const std::string& outPath) {
  GramLattice lattice(spec.gram);
  RelationsResult r = computeRelations(spec, lattice, threads);
  printLatticeHeader(out, spec, lattice);
  out << "P0 " << r.p0.p0.size() << "  hat closure " << r.p0.hat.size() << "  index set " << r.p0.index.size();
  if (spec.nCap) out << " (n <= " << *spec.nCap << ")";
  out << "\ntheta vectors " << r.thetas.size() << "  rank " << r.report.rank() << "  relations "
      << r.report.relations.size() << "\n";
  for (const auto& rel : r.report.relations) out << formatRelation(rel, r.thetas, spec.power) << "\n";
  if (!outPath.empty()) writeJson(relationsJson(spec, lattice, r), outPath);
  return kOk;
}

int cmdVerify(const LatticeSpec& spec, const std::string& relPath, const std::optional<Rational>& trunc,
              const std::string& dumpPath, std::ostream& out) {
  GramLattice lattice(spec.gram);
  std::ifstream in(relPath);
  if (!in) throw InputError("cannot open relations file '" + relPath + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("relations file is not valid JSON: " + std::string(e.what()));
  }
  try {
    if (j.at("lattice").at("hash").get<std::string>() != latticeHash(lattice.gram()))
      throw InputError("relations file was produced for a different lattice");
    const long power = j.at("power").get<long>();
    if (power != spec.power) throw InputError("relations file power differs from the spec");
    std::vector<ThetaLabel> labels;
    for (const auto& t : j.at("thetas")) labels.push_back({vectorFromJson(t.at("alpha")), vectorFromJson(t.at("beta"))});
    const Rational T = trunc ? *trunc : spec.truncation;
    std::ofstream dump;
    if (!dumpPath.empty()) {
      dump.open(dumpPath);
      if (!dump) throw InputError("cannot write '" + dumpPath + "'");
    }
    std::size_t failures = 0, count = 0;
    for (const auto& rel : j.at("relations")) {
      const std::size_t dep = rel.at("dependent").get<std::size_t>();
      if (dep >= labels.size()) throw InputError("relation refers to a missing theta");
      std::vector<ThetaLabel> basis;
      std::vector<Cyclotomic> coeffs;
      for (const auto& term : rel.at("terms")) {
        const std::size_t idx = term.at("index").get<std::size_t>();
        if (idx >= labels.size()) throw InputError("relation refers to a missing theta");
        basis.push_back(labels[idx]);
        coeffs.push_back(cyclotomicFromJson(term.at("coefficient")));
      }
      JacobiQSeries residual = evaluateRelation(lattice, power, labels[dep], basis, coeffs, T);
      const bool ok = residual.isZero();
      failures += ok ? 0 : 1;
      ++count;
      out << (ok ? "ok   " : "FAIL ") << rel.value("text", thetaName(labels[dep], power)) << "\n";
      if (dump.is_open()) dump << "# residual of relation " << count << "\n" << residual.dump();
    }
    out << count - failures << "/" << count << " relations hold up to q^" << T.get_str() << "\n";
    return failures ? kVerifyFailure : kOk;
  } catch (const json::exception& e) {
    throw InputError("malformed relations file: " + std::string(e.what()));
  }
}

}  // namespace

int runMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear relations among powers of lattice theta series"};
  app.require_subcommand(1);
  std::string specPath, builtin, outPath, relPath, truncText, dumpPath;
  int maxSum = -1;
  unsigned threads = 1;

  auto addCommon = [&](CLI::App* sub) {
    auto* s = sub->add_option("--spec", specPath, "lattice spec JSON file");
    auto* b = sub->add_option("--builtin", builtin, "built-in spec name");
    s->excludes(b);
    sub->add_option("--out", outPath, "write a JSON report here");
    sub->add_option("--max-sum", maxSum, "largest s(p) tried by the P0 search");
  };
  auto* info = app.add_subcommand("info", "lattice invariants and representatives");
  addCommon(info);
  auto* find = app.add_subcommand("find-p0", "search the index set P0");
  addCommon(find);
  auto* rels = app.add_subcommand("relations", "compute Theta vectors and their linear relations");
  addCommon(rels);
  rels->add_option("--threads", threads, "worker threads for the Theta vectors")->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "check relations on truncated q-expansions");
  addCommon(verify);
  verify->add_option("--relations", relPath, "relations JSON produced by the relations command")->required();
  verify->add_option("--trunc", truncText, "truncation exponent (rational)");
  verify->add_option("--dump", dumpPath, "write residual series as text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (specPath.empty() && builtin.empty()) throw InputError("one of --spec or --builtin is required");
    LatticeSpec spec = specPath.empty() ? builtinSpec(builtin) : loadSpec(specPath);
    if (maxSum >= 0) spec.maxSum = maxSum;
    if (*info) return cmdInfo(spec, out, outPath);
    if (*find) return cmdFindP0(spec, out, outPath);
    if (*rels) return cmdRelations(spec, threads, out, outPath);
    std::optional<Rational> trunc;
    if (!truncText.empty()) trunc = parseRational(truncText);
    if (trunc && *trunc <= 0) throw InputError("--trunc must be positive");
    return cmdVerify(spec, relPath, trunc, dumpPath, out);
  } catch (const SearchError& e) {
    err << "search failure: " << e.what() << "\n";
    return kSearchFailure;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const StructuralError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace thetarel::cli
