#ifndef MFORGE_ERRORS_HPP
#define MFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace mforge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ZeroRoot : Error {
  using Error::Error;
};

/// 2(v.a)/(a.a) fell outside {-1, 0, +1}; carries the offending ratio.
struct NotMinusculeValue : Error {
  NotMinusculeValue(std::string msg, mpq_class r)
      : Error(std::move(msg)), ratio(std::move(r)) {}
  mpq_class ratio;
};

struct NonIntegerEntry : Error {
  using Error::Error;
};

struct GcmViolation : Error {
  using Error::Error;
};

struct ParameterOutOfRange : Error {
  using Error::Error;
};

struct UnknownLabel : Error {
  using Error::Error;
};

struct EmptyRestriction : Error {
  using Error::Error;
};

struct EmptySlice : Error {
  using Error::Error;
};

struct EmptySimpleSlice : Error {
  using Error::Error;
};

struct NotSubsets : Error {
  using Error::Error;
};

struct SeedNotInPsi : Error {
  using Error::Error;
};

struct NotInPsi : Error {
  using Error::Error;
};

struct NotFiniteType : Error {
  using Error::Error;
};

struct DependentSimpleSystem : Error {
  using Error::Error;
};

struct NotOnPolytope : Error {
  using Error::Error;
};

struct EqualVertices : Error {
  using Error::Error;
};

struct NotALineDistance : Error {
  using Error::Error;
};

struct WrongSystem : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace mforge

#endif
