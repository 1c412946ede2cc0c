#pragma once

#include <stdexcept>
#include <string>

namespace holant {

enum class ErrorCode {
  invalid_argument = 1,
  arity_mismatch,
  domain_mismatch,
  dimension_mismatch,
  schema,
  invariant,
  not_symmetric,
  not_commuting,
  io,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace holant
