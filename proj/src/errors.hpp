#pragma once

#include <stdexcept>
#include <string>

namespace leplab {

enum class ErrorCode {
  invalid_argument,   // bad input value, malformed structure, precondition violated
  universe_mismatch,  // operands live over different universes
  parse_error,        // malformed JSON / string encoding
  cap_exceeded,       // instance larger than the configured search/enumeration cap
  internal,           // a checked mathematical identity failed (bug or bad instance)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace leplab
