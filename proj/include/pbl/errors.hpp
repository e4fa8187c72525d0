#pragma once

#include <stdexcept>
#include <string>

namespace pbl {

/// Base class for every error this library throws on its own behalf.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// rinf/rsup over an empty collection.
struct EmptyCollectionError : Error { using Error::Error; };

/// Operation table is not n x n, or an entry is not a valid element index.
struct MalformedTablesError : Error { using Error::Error; };

/// Carrier has fewer than two elements.
struct SizeTooSmallError : Error { using Error::Error; };

/// Carrier too large for an exhaustive enumeration.
struct CarrierTooLargeError : Error { using Error::Error; };

/// An operation that requires a validated algebra received one that fails the axioms.
struct InvalidAlgebraError : Error { using Error::Error; };

/// Two fuzzy sets (or a set and an algebra) disagree on carrier size.
struct CarrierMismatchError : Error { using Error::Error; };

/// Endpoint grid lacks a required value (0, 1/2, and 1 must be present).
struct GridMissingHalfError : Error { using Error::Error; };

/// Threshold pair violates [0,0] <= alpha < beta <= [1,1], or a threshold is out of range.
struct BadThresholdsError : Error { using Error::Error; };

/// A scalar-only predicate received a set with a non-degenerate value.
struct NonScalarSetError : Error { using Error::Error; };

/// A membership value violates the dichotomy requirement and the set was not
/// built with the explicit escape hatch.
struct DichotomyError : Error { using Error::Error; };

/// Formula evaluation hit a variable the assignment does not bind.
struct UnboundVariableError : Error { using Error::Error; };

/// Verification request names a theorem the harness does not know.
struct UnknownTheoremError : Error { using Error::Error; };

/// Malformed input text (algebra files, fuzzy-set files, interval literals).
struct ParseError : Error { using Error::Error; };

}  // namespace pbl
