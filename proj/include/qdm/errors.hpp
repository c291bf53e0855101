#pragma once

#include <stdexcept>
#include <string>

namespace qdm {

/* Error categories map 1:1 onto CLI exit codes. */
enum class ErrKind : int {
  Parse = 1,
  Validation = 2,
  Invariant = 3,
  NefViolated = 4,
};

struct Error : std::runtime_error {
  ErrKind kind;
  Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail_parse(const std::string& msg) {
  throw Error(ErrKind::Parse, msg);
}
[[noreturn]] inline void fail_validation(const std::string& msg) {
  throw Error(ErrKind::Validation, msg);
}
[[noreturn]] inline void fail_invariant(const std::string& msg) {
  throw Error(ErrKind::Invariant, msg);
}
[[noreturn]] inline void fail_nef(const std::string& msg) {
  throw Error(ErrKind::NefViolated, msg);
}

}  // namespace qdm
