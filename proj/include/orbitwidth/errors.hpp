#pragma once

#include <stdexcept>
#include <string>

namespace orbitwidth {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed spectrum text (empty list, bad token, trailing junk).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// A rational with denominator zero, from parsing or from division.
struct ZeroDenominator : Error {
  explicit ZeroDenominator(const std::string& what) : Error(what) {}
};

/// Request would enumerate more than the configured cap allows (n! growth).
struct EnumerationCapExceeded : Error {
  explicit EnumerationCapExceeded(const std::string& what) : Error(what) {}
};

/// Operation requires a non-trivial orbit but the spectrum has a single block.
struct PointOrbit : Error {
  explicit PointOrbit(const std::string& what) : Error(what) {}
};

/// Vector or matrix sizes are inconsistent with the requested operation.
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// Input matrix does not have full column rank at the configured threshold.
struct RankDeficient : Error {
  explicit RankDeficient(const std::string& what) : Error(what) {}
};

/// Incidence data is degenerate: the line through the data is not unique.
struct GenericityViolated : Error {
  explicit GenericityViolated(const std::string& what) : Error(what) {}
};

/// Flag subspaces are not nested within tolerance.
struct NestingViolation : Error {
  explicit NestingViolation(const std::string& what) : Error(what) {}
};

/// A numerical input violates a structural tolerance (Hermitian, skew, ...).
struct ToleranceViolation : Error {
  explicit ToleranceViolation(const std::string& what) : Error(what) {}
};

}  // namespace orbitwidth
