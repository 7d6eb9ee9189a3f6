#pragma once

#include <stdexcept>
#include <string>

namespace kronecker {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller supplied an argument outside the documented domain
/// (n < 3, an even index where an odd one is required, a zero vector, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A computed quantity contradicts a proven statement about K_n
/// (for example more than two nodes of one length in a regular component).
/// Seeing this means a bug, never a property of the input.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// A representation-level operation produced dimensions other than the
/// Coxeter-matrix prediction, which signals a projective or injective summand.
class DimensionContractError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a fixed memory budget (dense elimination of a
/// very large Hom system).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Brick construction failed its self-check. Carries the rendered case trace.
class ConstructionError : public Error {
 public:
  ConstructionError(const std::string& what, std::string trace)
      : Error(what + " [trace: " + trace + "]"), trace_(std::move(trace)) {}

  const std::string& trace() const noexcept { return trace_; }

 private:
  std::string trace_;
};

}  // namespace kronecker
