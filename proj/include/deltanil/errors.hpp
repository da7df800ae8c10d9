#pragma once

#include <stdexcept>
#include <string>

namespace deltanil {

/// Rejected input data (bad prime, exponents, ranks). The CLI maps this to a
/// usage error.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A closed form was evaluated outside its hypothesis.
class CaseNotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Hypercenter step outside [1, class].
class StepOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A residue matrix does not satisfy the block divisibility shape.
class ShapeViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The matrix is not of the form 1 + a with a in the radical shape.
class NotInDelta : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotContainedInRadical : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Enumeration refused: the group order exceeds the configured guard.
class OrderExceedsGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A brute-force annihilator came out as something other than an
/// exponent-matrix ideal. Must never fire.
class NotExponentShaped : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two independent computations of the same object disagree. Must never fire.
class InternalMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Command line could not be parsed; carries a one-line hint.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace deltanil
