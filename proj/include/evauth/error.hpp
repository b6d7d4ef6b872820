#pragma once

#include <stdexcept>
#include <string>

namespace evauth {

enum class ErrorCode {
  invalid_argument,
  not_found,
  duplicate,
  refund_exceeded,
  io,
  protocol,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace evauth
