#pragma once

#include <stdexcept>
#include <string>

namespace rgrover {

// Base class for all library errors. The concrete class name is prepended to
// the message so callers that only see what() can still report it.
struct Error : std::runtime_error {
  Error(const std::string& name, const std::string& msg)
      : std::runtime_error(name + ": " + msg) {}
};

#define RGROVER_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                              \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}     \
  }

RGROVER_DEFINE_ERROR(DimensionMismatch);
RGROVER_DEFINE_ERROR(NotUnitary);
RGROVER_DEFINE_ERROR(InvalidCounts);
RGROVER_DEFINE_ERROR(NoLocalMax);
RGROVER_DEFINE_ERROR(InvalidClassSplit);
RGROVER_DEFINE_ERROR(OutOfRange);
RGROVER_DEFINE_ERROR(DegenerateAngle);
RGROVER_DEFINE_ERROR(ZeroMass);
RGROVER_DEFINE_ERROR(NoSolution);
RGROVER_DEFINE_ERROR(TooWide);
RGROVER_DEFINE_ERROR(NotExactlyRepresentable);
RGROVER_DEFINE_ERROR(ZeroMax);
RGROVER_DEFINE_ERROR(TooLarge);
RGROVER_DEFINE_ERROR(ParseError);

#undef RGROVER_DEFINE_ERROR

}  // namespace rgrover
