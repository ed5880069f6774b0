#include "haarlab/step_function.hpp"

#include <algorithm>

#include "haarlab/config.hpp"
#include "haarlab/error.hpp"

namespace haarlab {

StepFunction::StepFunction(int resolution, std::vector<Rational> values)
    : resolution_(resolution), values_(std::move(values)) {
  if (resolution < 0 || resolution > max_level()) {
    fail(Errc::resolution_overflow,
         "resolution " + std::to_string(resolution) + " outside [0, " +
             std::to_string(max_level()) + "]");
  }
  if (values_.size() != (std::size_t(1) << resolution)) {
    fail(Errc::invalid_parameter,
         "expected " + std::to_string(std::size_t(1) << resolution) +
             " values, got " + std::to_string(values_.size()));
  }
}

StepFunction StepFunction::zero(int resolution) {
  return StepFunction(resolution,
                      std::vector<Rational>(std::size_t(1) << resolution));
}

StepFunction StepFunction::lifted(int resolution) const {
  if (resolution < resolution_) {
    fail(Errc::invalid_parameter, "lift target coarser than the function");
  }
  if (resolution == resolution_) return *this;
  const std::size_t reps = std::size_t(1) << (resolution - resolution_);
  std::vector<Rational> out;
  out.reserve(values_.size() * reps);
  for (const auto& v : values_) {
    out.insert(out.end(), reps, v);
  }
  return StepFunction(resolution, std::move(out));
}

bool StepFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& v) { return v == 0; });
}

bool operator==(const StepFunction& a, const StepFunction& b) {
  const int n = std::max(a.resolution(), b.resolution());
  return a.lifted(n).values() == b.lifted(n).values();
}

StepFunction operator+(const StepFunction& a, const StepFunction& b) {
  const int n = std::max(a.resolution(), b.resolution());
  StepFunction fa = a.lifted(n);
  const StepFunction fb = b.lifted(n);
  std::vector<Rational> vals = fa.values();
  for (std::size_t k = 0; k < vals.size(); ++k) vals[k] += fb.values()[k];
  return StepFunction(n, std::move(vals));
}

StepFunction operator-(const StepFunction& a, const StepFunction& b) {
  return a + (Rational(-1) * b);
}

StepFunction operator*(const Rational& c, const StepFunction& f) {
  std::vector<Rational> vals = f.values();
  for (auto& v : vals) v *= c;
  return StepFunction(f.resolution(), std::move(vals));
}

Rational l1_norm(const StepFunction& f) {
  Rational sum = 0;
  for (const auto& v : f.values()) sum += abs(v);
  return sum * pow2(-f.resolution());
}

namespace {

// Sum of |value| (or the signed value) over the cells of i.
Rational accumulate_on(const StepFunction& f, const DyadicInterval& i,
                       bool absolute) {
  const int n = f.resolution();
  Rational sum = 0;
  if (i.is_root() || i.level() <= n) {
    std::size_t first = 0;
    std::size_t count = f.cell_count();
    if (!i.is_root()) {
      const int shift = n - i.level();
      first = i.index() << shift;
      count = std::size_t(1) << shift;
    }
    for (std::size_t k = first; k < first + count; ++k) {
      sum += absolute ? abs(f.values()[k]) : f.values()[k];
    }
    return sum * pow2(-n);
  }
  // Finer than the grid: f is constant there.
  const std::size_t cell = i.index() >> (i.level() - n);
  const Rational& v = f.values()[cell];
  return (absolute ? abs(v) : v) * pow2(-i.level());
}

}  // namespace

Rational norm_on(const StepFunction& f, const DyadicInterval& i) {
  return accumulate_on(f, i, true);
}

Rational norm_on_diff(const StepFunction& f, const DyadicInterval& outer,
                      const DyadicInterval& inner) {
  if (!subset_eq(inner, outer)) {
    fail(Errc::not_comparable,
         inner.str() + " is not contained in " + outer.str());
  }
  return norm_on(f, outer) - norm_on(f, inner);
}

Rational integral_on(const StepFunction& f, const DyadicInterval& i) {
  return accumulate_on(f, i, false);
}

}  // namespace haarlab
