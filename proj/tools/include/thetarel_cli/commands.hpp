#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "thetarel/relations.hpp"
#include "thetarel_cli/spec.hpp"

namespace thetarel::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kSearchFailure = 3, kVerifyFailure = 4 };

struct P0Stage {
  std::vector<MultiIndex> p0;
  std::vector<MultiIndex> hat;
  std::vector<IndexEntry> index;
  bool supplied = false;
  std::size_t candidatesTried = 0;
};

// Finds (or checks a supplied) P0 for the rescaled lattice and builds the index set.
P0Stage runP0Stage(const LatticeSpec& spec, const GramLattice& lattice, const Rational& c);

struct RelationsResult {
  ResolvedReps reps;
  Rational c;
  P0Stage p0;
  std::vector<ThetaVector> thetas;
  RelationReport report;
};

RelationsResult computeRelations(const LatticeSpec& spec, const GramLattice& lattice, unsigned threads);

std::string latticeHash(const IntMatrix& gram);
std::string formatRelation(const Relation& r, const std::vector<ThetaVector>& thetas, long power);
nlohmann::json cyclotomicToJson(const Cyclotomic& c);
Cyclotomic cyclotomicFromJson(const nlohmann::json& j);

nlohmann::json infoJson(const LatticeSpec& spec, const GramLattice& lattice);
nlohmann::json relationsJson(const LatticeSpec& spec, const GramLattice& lattice, const RelationsResult& r);

// Whole command line, argv[0] included. Output goes to out, diagnostics to err.
int runMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thetarel::cli
