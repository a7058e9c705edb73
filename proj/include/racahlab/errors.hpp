#pragma once

#include <stdexcept>
#include <string>

namespace racahlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct RootsMismatch : Error {
  using Error::Error;
};
struct NonSplitting : Error {
  using Error::Error;
};
struct NotIrreducible : Error {
  using Error::Error;
};
struct NonDiagonalizableH : Error {
  using Error::Error;
};
struct ClassMismatch : Error {
  using Error::Error;
};
struct DimMismatch : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace racahlab
