#pragma once

#include <stdexcept>
#include <string>

namespace thetarel {

// Shape or order mismatch between operands.
struct StructuralError : std::logic_error {
  using std::logic_error::logic_error;
};

// Division by zero, inverse of zero, poles of the gamma ratio.
struct DivisionError : std::domain_error {
  using std::domain_error::domain_error;
};

// Caller violated a documented precondition.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input data rejected during validation (bad Gram, bad reps, bad JSON).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// find_p0 ran out of candidates before reaching full rank.
struct SearchError : std::runtime_error {
  SearchError(const std::string& msg, std::size_t achieved, std::size_t wanted)
      : std::runtime_error(msg), achievedRank(achieved), targetRank(wanted) {}
  std::size_t achievedRank;
  std::size_t targetRank;
};

}  // namespace thetarel
