#include "haarlab/json_io.hpp"

#include "haarlab/error.hpp"

namespace haarlab {

using nlohmann::json;

namespace {

const json& expect(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(Errc::schema, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string expect_string(const json& j, const char* what) {
  if (!j.is_string()) fail(Errc::schema, std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

json to_json(const StepFunction& f) {
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(to_string(v));
  return json{{"resolution", f.resolution()}, {"values", std::move(values)}};
}

StepFunction step_function_from_json(const json& j) {
  const json& res = expect(j, "resolution");
  if (!res.is_number_integer()) fail(Errc::schema, "resolution must be an integer");
  const json& values = expect(j, "values");
  if (!values.is_array()) fail(Errc::schema, "values must be an array");
  std::vector<Rational> vals;
  vals.reserve(values.size());
  for (const auto& v : values) {
    vals.push_back(parse_rational(expect_string(v, "value")));
  }
  return StepFunction(res.get<int>(), std::move(vals));
}

json to_json(const HaarExpansion& e) {
  json coeffs = json::object();
  for (const auto& [i, v] : e) coeffs[i.str()] = to_string(v);
  return json{{"coeffs", std::move(coeffs)}};
}

HaarExpansion expansion_from_json(const json& j) {
  const json& coeffs = expect(j, "coeffs");
  if (!coeffs.is_object()) fail(Errc::schema, "coeffs must be an object");
  HaarExpansion out;
  for (const auto& [key, value] : coeffs.items()) {
    out.set(DyadicInterval::parse(key),
            parse_rational(expect_string(value, "coefficient")));
  }
  return out;
}

json to_json(const IntervalSet& s) {
  json out = json::array();
  for (const auto& i : s) out.push_back(i.str());
  return out;
}

IntervalSet interval_set_from_json(const json& j) {
  if (!j.is_array()) fail(Errc::schema, "interval set must be an array");
  IntervalSet out;
  for (const auto& v : j) {
    out.insert(DyadicInterval::parse(expect_string(v, "interval")));
  }
  return out;
}

json to_json(const BoundCertificate& c) {
  json bands = json::array();
  for (const auto& b : c.bands) {
    bands.push_back(json{{"m", b.m},
                         {"band", to_json(b.band)},
                         {"enlarged", to_json(b.enlarged)}});
  }
  return json{{"lhs", to_string(c.lhs)},
              {"rhs_norm", to_string(c.rhs_norm)},
              {"constant", to_string(c.constant)},
              {"selected", to_json(c.selected)},
              {"bands", std::move(bands)},
              {"satisfied", c.satisfied},
              {"m0", c.m0},
              {"odd_pass_count", c.odd_pass_count},
              {"even_pass_count", c.even_pass_count}};
}

json to_json(const SymmetrizedPair& p) {
  json trace = json::array();
  for (const auto& [i, branch] : p.trace) {
    trace.push_back(json{{"interval", i.str()}, {"branch", branch_name(branch)}});
  }
  return json{{"f_tilde", to_json(p.f_tilde)},
              {"g_tilde", to_json(p.g_tilde)},
              {"trace", std::move(trace)}};
}

json to_json(const CheckReport& r) {
  json out{{"statement", r.statement},
           {"trials", r.trials},
           {"violations", r.violations},
           {"seed", r.seed},
           {"resolution", r.resolution}};
  if (r.worst_ratio_defined) {
    out["worst_ratio"] = to_string(r.worst_ratio);
  } else {
    out["worst_ratio"] = nullptr;
  }
  if (!r.witness.empty()) {
    out["witness"] = json::parse(r.witness);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const ExampleResult& r) {
  return json{{"f", to_json(r.f)},
              {"A", to_json(r.a)},
              {"norms", json{{"f", to_string(r.f_norm)},
                             {"projection", to_string(r.projection_norm)}}}};
}

}  // namespace haarlab
