#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kxs {

// Error taxonomy mirrored by the C API status codes and the CLI exit codes.
enum class ErrorCode {
  parse,     // malformed input files, bad config, usage-level problems
  contract,  // a call violated a documented precondition
  size,      // ground set too large for an exact/exhaustive routine
  invalid,   // misuse of the API surface (null handle, wrong state)
  property,  // a verified property failed on a concrete instance
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_parse(std::string msg) {
  throw Error(ErrorCode::parse, std::move(msg));
}
[[noreturn]] inline void throw_contract(std::string msg) {
  throw Error(ErrorCode::contract, std::move(msg));
}
[[noreturn]] inline void throw_size(std::string msg) {
  throw Error(ErrorCode::size, std::move(msg));
}
[[noreturn]] inline void throw_invalid(std::string msg) {
  throw Error(ErrorCode::invalid, std::move(msg));
}

}  // namespace kxs
