#pragma once

#include <stdexcept>
#include <string>

namespace ghg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arguments that violate a precondition (bad degree, malformed class, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

/// A homomorphism matrix that does not respect torsion orders.
struct IllDefinedMap : Error {
  using Error::Error;
};

/// A brute-force or enumeration step would exceed its configured bound.
struct CapacityExceeded : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

struct UnknownGroup : Error {
  using Error::Error;
};

struct TableDepthExceeded : Error {
  using Error::Error;
};

/// Samelson data required for a connecting map is not catalogued.
struct PairingUnavailableError : Error {
  using Error::Error;
};

}  // namespace ghg
