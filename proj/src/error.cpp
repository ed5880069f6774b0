#include "haarlab/error.hpp"

namespace haarlab {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::resolution_overflow: return "resolution-overflow";
    case Errc::resolution_too_small: return "resolution-too-small";
    case Errc::not_comparable: return "not-comparable";
    case Errc::empty_set: return "empty-set";
    case Errc::not_a_member: return "not-a-member";
    case Errc::nonpositive_threshold: return "nonpositive-threshold";
    case Errc::zero_coefficient: return "zero-coefficient";
    case Errc::root_interval: return "root-interval";
    case Errc::precondition: return "precondition";
    case Errc::verification_failed: return "verification-failed";
    case Errc::invalid_parameter: return "invalid-parameter";
    case Errc::unknown_statement: return "unknown-statement";
    case Errc::schema: return "schema";
  }
  return "unknown";
}

}  // namespace haarlab
