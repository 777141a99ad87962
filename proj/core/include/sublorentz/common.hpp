#pragma once

#include <stdexcept>
#include <string>

namespace sublorentz {

/// Library-wide default tolerance for approximate predicates.
inline constexpr double kDefaultTolerance = 1e-12;

enum class ErrorCode {
  kIndexOutOfRange,
  kNonFinite,
  kNotInSubspace,
  kNotHermitian,
  kNotPositiveDefinite,
  kNotUnimodular,
  kNotSpecialUnitary,
  kNotInGLPlus,
  kSingular,
  kBadNormalization,
  kOverflow,
  kDivergence,
  kNotReachable,
  kInvalidArgument,
  kParse,
};

const char* to_string(ErrorCode code);

/// Every precondition failure in the library is reported through this type.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sublorentz
