#ifndef TROPREAL_ERRORS_HPP
#define TROPREAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropreal {

enum class ErrorKind {
  FieldMismatch,
  DivisionByZero,
  BadDimensions,
  NotNormalized,
  Unbalanced,
  ParallelRays,
  ZeroVector,
  RankDeficient,
  LoopyMatroid,
  NotABasis,
  RayOutsideFan,
  CharNotZero,
  NotRealizable,
  DegreeMismatch,
  InvalidNormal,
  ParseError,
  InvariantViolation,
};

const char* to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind; the CLI maps kinds to exit codes.
class TropError : public std::runtime_error {
 public:
  TropError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tropreal

#endif
