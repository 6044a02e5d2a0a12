#pragma once

#include <stdexcept>

namespace rtp {

// Base class for every error raised by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// series -------------------------------------------------------------

// expand() was asked to develop a rational function whose denominator
// vanishes at t = 0.
struct ExpansionAtPole : Error {
  using Error::Error;
};

// recip() needs a unit constant term.
struct NonUnitConstantTerm : Error {
  using Error::Error;
};

// revert() needs h(0) = 0 and h'(0) != 0, plus at least order 1.
struct NotRevertible : Error {
  using Error::Error;
};

// compose() is formal substitution: the inner series must vanish at 0.
struct NonzeroInnerConstant : Error {
  using Error::Error;
};

// matrix -------------------------------------------------------------

struct NotSquare : Error {
  using Error::Error;
};

// Minor index sets must be strictly increasing, equal-sized, in range.
struct BadIndexSet : Error {
  using Error::Error;
};

// riordan ------------------------------------------------------------

// Raised where an operation is defined only for proper arrays
// (d0 != 0, h0 = 0, h1 != 0), or when a matrix handed to extract_az
// is not the truncation of a proper Riordan array.
struct ImproperArray : Error {
  using Error::Error;
};

// The truncation is too small for the requested extraction length.
struct InsufficientTruncation : Error {
  using Error::Error;
};

// criteria -----------------------------------------------------------

// pf_check_rational requires numerator and denominator coprime.
struct NotReduced : Error {
  using Error::Error;
};

// catalog / cli ------------------------------------------------------

struct UnknownName : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// A rational generating function in a spec file has den(0) = 0.
struct ZeroDenominatorConstant : Error {
  using Error::Error;
};

}  // namespace rtp
