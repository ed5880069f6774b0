#pragma once

#include <stdexcept>
#include <string>

namespace haarlab {

enum class Errc {
  resolution_overflow,
  resolution_too_small,
  not_comparable,
  empty_set,
  not_a_member,
  nonpositive_threshold,
  zero_coefficient,
  root_interval,
  precondition,
  verification_failed,
  invalid_parameter,
  unknown_statement,
  schema,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  Errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace haarlab
