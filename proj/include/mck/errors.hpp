#ifndef MCK_ERRORS_HPP_
#define MCK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mck {

// Numeric-regime errors. Everything here means "the requested computation is
// outside the regime where the algorithms are valid", as opposed to usage
// errors (bad config), which are plain std::invalid_argument.
enum class ErrorCode {
  NonFinite,
  AmbiguousBranch,
  NotSimple,
  VanishingEta,
  ZeroOnContour,
  NonConvergent,
  WrongCount,
  SmallDenominator,
  BranchError,
  DegenerateGap,
  LostTracking,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::AmbiguousBranch: return "AmbiguousBranch";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::VanishingEta: return "VanishingEta";
    case ErrorCode::ZeroOnContour: return "ZeroOnContour";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::WrongCount: return "WrongCount";
    case ErrorCode::SmallDenominator: return "SmallDenominator";
    case ErrorCode::BranchError: return "BranchError";
    case ErrorCode::DegenerateGap: return "DegenerateGap";
    case ErrorCode::LostTracking: return "LostTracking";
  }
  return "Unknown";
}

class NumericError : public std::runtime_error {
 public:
  NumericError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw NumericError(code, what);
}

}  // namespace mck

#endif  // MCK_ERRORS_HPP_
