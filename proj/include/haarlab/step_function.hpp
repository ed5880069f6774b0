#pragma once

#include <cstddef>
#include <vector>

#include "haarlab/dyadic.hpp"
#include "haarlab/rational.hpp"

namespace haarlab {

// Piecewise-constant function on [0,1) with exact rational values: entry k
// is the value on [k*2^-N, (k+1)*2^-N). Immutable after construction.
class StepFunction {
 public:
  // Zero function at resolution 0.
  StepFunction() : resolution_(0), values_(1, Rational(0)) {}

  // values.size() must be exactly 2^resolution; resolution <= max_level().
  StepFunction(int resolution, std::vector<Rational> values);

  static StepFunction zero(int resolution);

  int resolution() const { return resolution_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t cell_count() const { return values_.size(); }

  // Same function on a finer grid (each value duplicated).
  StepFunction lifted(int resolution) const;

  bool is_zero() const;

 private:
  int resolution_;
  std::vector<Rational> values_;
};

// Equality of the underlying functions (both sides lifted to the common
// finer resolution first).
bool operator==(const StepFunction& a, const StepFunction& b);
inline bool operator!=(const StepFunction& a, const StepFunction& b) {
  return !(a == b);
}

StepFunction operator+(const StepFunction& a, const StepFunction& b);
StepFunction operator-(const StepFunction& a, const StepFunction& b);
StepFunction operator*(const Rational& c, const StepFunction& f);

// Integral of |f| over [0,1).
Rational l1_norm(const StepFunction& f);

// Integral of |f| over i (the root is treated as [0,1]). Intervals finer
// than the resolution see the constant cell value.
Rational norm_on(const StepFunction& f, const DyadicInterval& i);

// Integral of |f| over outer \ inner; requires inner <= outer.
Rational norm_on_diff(const StepFunction& f, const DyadicInterval& outer,
                      const DyadicInterval& inner);

// Integral of f (signed) over i, same interval conventions as norm_on.
Rational integral_on(const StepFunction& f, const DyadicInterval& i);

}  // namespace haarlab
