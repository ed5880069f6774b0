#pragma once

#include <map>

#include "haarlab/dyadic.hpp"
#include "haarlab/rational.hpp"
#include "haarlab/step_function.hpp"

namespace haarlab {

// Finite sparse Haar coefficient map; only nonzero entries are stored, so
// the key set is exactly the Haar support.
class HaarExpansion {
 public:
  using Map = std::map<DyadicInterval, Rational>;

  HaarExpansion() = default;

  // Stores value at i, erasing the entry when value == 0.
  void set(const DyadicInterval& i, const Rational& value);

  // Coefficient at i (zero when absent).
  Rational at(const DyadicInterval& i) const;

  bool contains(const DyadicInterval& i) const { return coeffs_.count(i) > 0; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }

  IntervalSet support() const;

  Map::const_iterator begin() const { return coeffs_.begin(); }
  Map::const_iterator end() const { return coeffs_.end(); }

  friend bool operator==(const HaarExpansion&, const HaarExpansion&) = default;

 private:
  Map coeffs_;
};

// h_I as a step function: 2^n (1_{I+} - 1_{I-}) for m(I) = 2^-n, and
// 1_{[0,1)} for the root. Requires level(i) < resolution.
StepFunction haar_function(const DyadicInterval& i, int resolution);

// Exact Haar coefficients: c_I(f) = int_{I+} f - int_{I-} f, and the root
// coefficient is the integral over [0,1).
HaarExpansion analyze(const StepFunction& f);

// Single coefficient straight from the defining integrals (no transform).
Rational coefficient(const StepFunction& f, const DyadicInterval& i);

// Pointwise sum of c_I h_I at the given resolution. Every key must be the
// root or have level < resolution, else Errc::resolution_too_small.
StepFunction synthesize(const HaarExpansion& coeffs, int resolution);

// Coordinate projection onto span(h_I : I in s).
StepFunction project(const StepFunction& f, const IntervalSet& s);

// f minus every Haar component supported inside i; the result is constant
// on i.
StepFunction tail_projection(const StepFunction& f, const DyadicInterval& i);

struct ThresholdResult {
  StepFunction function;
  IntervalSet selected;
};

// Keeps exactly the coefficients with |c_I(f)| >= delta; delta must be
// positive (Errc::nonpositive_threshold).
ThresholdResult threshold(const StepFunction& f, const Rational& delta);

}  // namespace haarlab
