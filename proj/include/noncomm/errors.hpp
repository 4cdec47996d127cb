#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace noncomm {

// Operands disagree on dimension (nvars, rank, or cyclotomic order).
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Argument outside the supported desk-scale range.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Evaluation at a pole: zero coordinate meeting a negative exponent.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivisionByZeroError : std::domain_error {
  using std::domain_error::domain_error;
};

// Variable images that do not define a ring automorphism.
struct InvalidActionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation not defined for these operands (e.g. negative power of a sum).
struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input claimed invariant is not; carries the offending monomial.
struct NotInvariantError : std::domain_error {
  NotInvariantError(const std::string& what, std::string monomial)
      : std::domain_error(what), offending_monomial(std::move(monomial)) {}
  std::string offending_monomial;
};

// An identity that is certified at construction time failed; carries a witness.
struct CertificationError : std::logic_error {
  explicit CertificationError(const std::string& what, std::string witness = {})
      : std::logic_error(what), witness(std::move(witness)) {}
  std::string witness;
};

struct NonTerminationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Power budget exhausted while clearing denominators; reports the worst exponent left.
struct ClearingError : std::runtime_error {
  ClearingError(const std::string& what, int worst)
      : std::runtime_error(what), most_negative_exponent(worst) {}
  int most_negative_exponent;
};

}  // namespace noncomm
