#pragma once

#include <stdexcept>
#include <string>

namespace cwp {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  DimensionMismatch,
  NotInPowerSubring,
  CoordinateHyperplaneComponent,
  UndefinedDual,
  ForbiddenExponent,
  RankDeficient,
  BudgetExceeded,
  UnsupportedSize,
  Unsupported,
  InternalClassificationError,
  Internal,
};

const char* to_string(ErrorCode code);

// All failures raised by the library carry one of the codes above so the
// C layer can map them onto status values without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const char* what) {
  if (!condition) fail(code, what);
}

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

// Enumeration / interpolation / frontier limits shared by the modules.
struct Budget {
  unsigned long long group_elements = 10'000'000ULL;
  unsigned long long frontier = 100'000ULL;
  unsigned long long columns = 100'000ULL;
};

}  // namespace cwp
