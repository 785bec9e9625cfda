#pragma once

#include <stdexcept>
#include <string>

namespace fracreduce {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- polynomial layer ---

struct NegativeExponentError : Error {
  using Error::Error;
};

struct ZeroPolynomialError : Error {
  using Error::Error;
};

struct IncompatibleDenominatorError : Error {
  using Error::Error;
};

// Exponents are kept in 64-bit rationals; construction past the documented
// caps (denominator 1e6, numerator 1e9) or internal overflow lands here.
struct ExponentLimitError : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

// --- root finding ---

struct InvalidToleranceError : Error {
  using Error::Error;
};

struct NonConvergenceError : Error {
  using Error::Error;
};

struct DegenerateLeadingError : Error {
  using Error::Error;
};

// --- grid operators and special functions ---

struct PoleError : Error {
  using Error::Error;
};

struct OrderOutOfRangeError : Error {
  using Error::Error;
};

struct BaseMismatchError : Error {
  using Error::Error;
};

// Argument outside the series-safe region of the Mittag-Leffler evaluator.
struct DomainError : Error {
  using Error::Error;
};

// --- integer-order equation solvers ---

struct FirstKindUnsupportedError : Error {
  using Error::Error;
};

struct SingularStepError : Error {
  using Error::Error;
};

struct IllConditionedError : Error {
  using Error::Error;
};

// --- pipeline ---

struct NoSolutionError : Error {
  using Error::Error;
};

// --- equation text ---

struct SyntaxError : Error {
  int line = 0;
  int column = 0;
  std::string expected;
  SyntaxError(const std::string& msg, int line_, int column_, std::string expected_)
      : Error(msg + " at line " + std::to_string(line_) + ", column " +
              std::to_string(column_) +
              (expected_.empty() ? std::string() : " (expected " + expected_ + ")")),
        line(line_),
        column(column_),
        expected(std::move(expected_)) {}
};

struct MultipleUnknownsError : Error {
  using Error::Error;
};

struct NegativeOrderError : Error {
  using Error::Error;
};

struct UnboundSymbolError : Error {
  using Error::Error;
};

}  // namespace fracreduce
