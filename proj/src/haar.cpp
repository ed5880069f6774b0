#include "haarlab/haar.hpp"

#include <utility>

#include "haarlab/config.hpp"
#include "haarlab/error.hpp"

namespace haarlab {

void HaarExpansion::set(const DyadicInterval& i, const Rational& value) {
  if (value == 0) {
    coeffs_.erase(i);
  } else {
    coeffs_[i] = value;
  }
}

Rational HaarExpansion::at(const DyadicInterval& i) const {
  const auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

IntervalSet HaarExpansion::support() const {
  IntervalSet out;
  for (const auto& [i, v] : coeffs_) out.insert(i);
  return out;
}

StepFunction haar_function(const DyadicInterval& i, int resolution) {
  HaarExpansion e;
  e.set(i, Rational(1));
  return synthesize(e, resolution);
}

HaarExpansion analyze(const StepFunction& f) {
  const int n = f.resolution();
  std::vector<Rational> integrals(f.values());
  const Rational cell = pow2(-n);
  for (auto& v : integrals) v *= cell;

  HaarExpansion out;
  for (int level = n - 1; level >= 0; --level) {
    std::vector<Rational> coarse(std::size_t(1) << level);
    for (std::size_t k = 0; k < coarse.size(); ++k) {
      const Rational diff = integrals[2 * k] - integrals[2 * k + 1];
      if (diff != 0) out.set(DyadicInterval(level, k), diff);
      coarse[k] = integrals[2 * k] + integrals[2 * k + 1];
    }
    integrals = std::move(coarse);
  }
  if (integrals[0] != 0) out.set(DyadicInterval::root(), integrals[0]);
  return out;
}

Rational coefficient(const StepFunction& f, const DyadicInterval& i) {
  if (i.is_root()) return integral_on(f, DyadicInterval::root());
  const Halves h = halves(i, kHardMaxLevel);
  return integral_on(f, h.left) - integral_on(f, *h.right);
}

StepFunction synthesize(const HaarExpansion& coeffs, int resolution) {
  for (const auto& [i, v] : coeffs) {
    if (!i.is_root() && i.level() >= resolution) {
      fail(Errc::resolution_too_small,
           "coefficient at " + i.str() + " needs resolution > " +
               std::to_string(i.level()));
    }
  }
  std::vector<Rational> vals{coeffs.at(DyadicInterval::root())};
  for (int level = 0; level < resolution; ++level) {
    std::vector<Rational> fine(std::size_t(1) << (level + 1));
    const Rational scale = pow2(level);
    for (std::size_t k = 0; k < vals.size(); ++k) {
      const Rational c = coeffs.at(DyadicInterval(level, k));
      if (c == 0) {
        fine[2 * k] = vals[k];
        fine[2 * k + 1] = vals[k];
      } else {
        const Rational bump = scale * c;
        fine[2 * k] = vals[k] + bump;
        fine[2 * k + 1] = vals[k] - bump;
      }
    }
    vals = std::move(fine);
  }
  return StepFunction(resolution, std::move(vals));
}

StepFunction project(const StepFunction& f, const IntervalSet& s) {
  const HaarExpansion all = analyze(f);
  HaarExpansion kept;
  for (const auto& [i, v] : all) {
    if (s.count(i) > 0) kept.set(i, v);
  }
  return synthesize(kept, f.resolution());
}

StepFunction tail_projection(const StepFunction& f, const DyadicInterval& i) {
  const HaarExpansion all = analyze(f);
  HaarExpansion kept;
  for (const auto& [j, v] : all) {
    if (!subset_eq(j, i)) kept.set(j, v);
  }
  return synthesize(kept, f.resolution());
}

ThresholdResult threshold(const StepFunction& f, const Rational& delta) {
  if (delta <= 0) {
    fail(Errc::nonpositive_threshold, "threshold must be positive, got " +
                                          to_string(delta));
  }
  const HaarExpansion all = analyze(f);
  HaarExpansion kept;
  IntervalSet selected;
  for (const auto& [i, v] : all) {
    if (abs(v) >= delta) {
      kept.set(i, v);
      selected.insert(i);
    }
  }
  return {synthesize(kept, f.resolution()), std::move(selected)};
}

}  // namespace haarlab
