#pragma once

#include <stdexcept>
#include <string>

namespace gl2h {

enum class ErrorCode {
  InvalidArgument,
  UnsupportedPrime,
  ResourceLimit,
  Io,
  Internal,
};

// Every failure raised by the core carries one of the codes above so the C
// boundary can translate it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gl2h
