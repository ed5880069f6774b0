#pragma once

#include <json.hpp>

#include "haarlab/dyadic.hpp"
#include "haarlab/enlargement.hpp"
#include "haarlab/haar.hpp"
#include "haarlab/step_function.hpp"
#include "haarlab/symmetrization.hpp"
#include "haarlab/verification.hpp"

namespace haarlab {

// Wire formats (all rationals as canonical "p/q" strings):
//   StepFunction   {"resolution": N, "values": ["p/q", ...]}
//   HaarExpansion  {"coeffs": {"level/index": "p/q", ...}}
//   IntervalSet    ["root", "1/0", ...]
// Malformed payloads throw Errc::schema.

nlohmann::json to_json(const StepFunction& f);
StepFunction step_function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HaarExpansion& e);
HaarExpansion expansion_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundCertificate& c);

nlohmann::json to_json(const SymmetrizedPair& p);

// Omits elapsed time so identical (statement, trials, seed, resolution)
// invocations serialize byte-identically.
nlohmann::json to_json(const CheckReport& r);

nlohmann::json to_json(const ExampleResult& r);

}  // namespace haarlab
