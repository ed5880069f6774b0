#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haarlab/error.hpp"
#include "haarlab/haar.hpp"
#include "haarlab/rng.hpp"
#include "oracle.hpp"

using namespace haarlab;

namespace {

DyadicInterval iv(int level, std::uint64_t index) {
  return DyadicInterval(level, index);
}

StepFunction sf(int resolution, std::vector<int> vals) {
  std::vector<Rational> out(vals.begin(), vals.end());
  return StepFunction(resolution, std::move(out));
}

StepFunction random_function(Rng& rng, int resolution) {
  std::vector<Rational> vals(std::size_t(1) << resolution);
  for (auto& v : vals) {
    if (rng.flip()) v = rng.nonzero_rational(9, 6);
  }
  return StepFunction(resolution, std::move(vals));
}

HaarExpansion random_expansion(Rng& rng, int resolution) {
  HaarExpansion out;
  const int n = rng.range(0, 6);
  for (int t = 0; t < n; ++t) {
    if (rng.below(8) == 0) {
      out.set(DyadicInterval::root(), rng.nonzero_rational(9, 6));
    } else {
      const int level = rng.range(0, resolution - 1);
      out.set(DyadicInterval(level, rng.below(std::uint64_t(1) << level)),
              rng.nonzero_rational(9, 6));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("analyze on the worked examples") {
  {
    const HaarExpansion c = analyze(sf(0, {1}));
    CHECK(c.size() == 1);
    CHECK(c.at(DyadicInterval::root()) == 1);
  }
  {
    const HaarExpansion c = analyze(sf(2, {4, 0, 0, 0}));
    CHECK(c.size() == 3);
    CHECK(c.at(DyadicInterval::root()) == 1);
    CHECK(c.at(iv(0, 0)) == 1);
    CHECK(c.at(iv(1, 0)) == 1);
  }
  {
    const HaarExpansion c = analyze(sf(1, {1, -1}));
    CHECK(c.size() == 1);
    CHECK(c.at(iv(0, 0)) == 1);
  }
}

TEST_CASE("synthesize on the worked examples") {
  {
    HaarExpansion c;
    c.set(iv(0, 0), Rational(1));
    CHECK(synthesize(c, 1) == sf(1, {1, -1}));
  }
  {
    HaarExpansion c;
    c.set(DyadicInterval::root(), Rational(1));
    c.set(iv(0, 0), Rational(1));
    c.set(iv(1, 0), Rational(1));
    CHECK(synthesize(c, 2) == sf(2, {4, 0, 0, 0}));
  }
  CHECK(synthesize({}, 3) == StepFunction::zero(3));

  HaarExpansion deep;
  deep.set(iv(3, 1), Rational(1));
  CHECK_THROWS_AS(synthesize(deep, 3), Error);
}

TEST_CASE("transform round trips exactly both ways") {
  Rng rng(101);
  for (int t = 0; t < 400; ++t) {
    const int n = rng.range(1, 7);
    const StepFunction f = random_function(rng, n);
    CHECK(synthesize(analyze(f), n) == f);
    const HaarExpansion c = random_expansion(rng, n);
    CHECK(analyze(synthesize(c, n)) == c);
  }
}

TEST_CASE("analyze agrees with the defining integrals") {
  Rng rng(202);
  for (int t = 0; t < 60; ++t) {
    const int n = rng.range(1, 5);
    const StepFunction f = random_function(rng, n);
    const HaarExpansion c = analyze(f);
    CHECK(c.at(DyadicInterval::root()) ==
          oracle::coefficient(f, DyadicInterval::root()));
    for (int level = 0; level < n; ++level) {
      for (std::uint64_t k = 0; k < (std::uint64_t(1) << level); ++k) {
        CHECK(c.at(iv(level, k)) == oracle::coefficient(f, iv(level, k)));
      }
    }
  }
}

TEST_CASE("haar functions are normalized and biorthogonal") {
  for (int level = 0; level < 6; ++level) {
    for (std::uint64_t k = 0; k < (std::uint64_t(1) << level); ++k) {
      const StepFunction h = haar_function(iv(level, k), 6);
      CHECK(l1_norm(h) == 1);
      const HaarExpansion c = analyze(h);
      CHECK(c.size() == 1);
      CHECK(c.at(iv(level, k)) == 1);
    }
  }
  CHECK(l1_norm(haar_function(DyadicInterval::root(), 6)) == 1);
}

TEST_CASE("norms on the worked examples") {
  const StepFunction f = sf(2, {4, 0, 0, 0});
  CHECK(l1_norm(f) == 1);
  CHECK(norm_on(f, iv(1, 0)) == 1);
  CHECK(l1_norm(StepFunction::zero(3)) == 0);
  // below-resolution interval sees the constant cell value
  CHECK(norm_on(f, iv(4, 0)) == Rational(4, 16));
}

TEST_CASE("restricted norms dominate coefficients") {
  Rng rng(303);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.range(2, 6);
    const StepFunction f = random_function(rng, n);
    const int level = rng.range(1, n - 1);
    const DyadicInterval j(level, rng.below(std::uint64_t(1) << level));
    DyadicInterval i = rng.flip() ? *parent(j) : j;
    if (rng.below(4) == 0) i = DyadicInterval::root();
    if (!subset_eq(j, i)) continue;
    CHECK(norm_on(f, i) >= norm_on(f, j));
    CHECK(norm_on(f, j) >= abs(coefficient(f, j)));
  }
}

TEST_CASE("project on the worked examples") {
  const StepFunction f = sf(2, {4, 0, 0, 0});
  const StepFunction p =
      project(f, {DyadicInterval::root(), iv(1, 0)});
  CHECK(p == sf(2, {3, -1, 1, 1}));
  CHECK(l1_norm(p) == Rational(3, 2));
  CHECK(project(f, {}) == StepFunction::zero(2));

  IntervalSet everything{DyadicInterval::root()};
  for (int level = 0; level < 2; ++level) {
    for (std::uint64_t k = 0; k < (std::uint64_t(1) << level); ++k) {
      everything.insert(iv(level, k));
    }
  }
  CHECK(project(f, everything) == f);
}

TEST_CASE("projection is idempotent with the expected support") {
  Rng rng(404);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.range(1, 6);
    const StepFunction f = random_function(rng, n);
    IntervalSet s;
    for (int j = rng.range(0, 6); j > 0; --j) {
      const int level = rng.range(0, n - 1);
      s.insert(iv(level, rng.below(std::uint64_t(1) << level)));
    }
    if (rng.flip()) s.insert(DyadicInterval::root());
    const StepFunction p = project(f, s);
    CHECK(project(p, s) == p);
    const IntervalSet support = analyze(p).support();
    for (const auto& i : support) CHECK(s.count(i) == 1);
    for (const auto& [i, v] : analyze(f)) {
      if (s.count(i) > 0) CHECK(analyze(p).at(i) == v);
    }
  }
}

TEST_CASE("monotone projections never grow the norm") {
  Rng rng(505);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.range(1, 6);
    const StepFunction f = random_function(rng, n);
    IntervalSet seed;
    for (int j = rng.range(0, 4); j > 0; --j) {
      const int level = rng.range(0, n - 1);
      seed.insert(iv(level, rng.below(std::uint64_t(1) << level)));
    }
    const IntervalSet closed = oracle::up_closure(seed, n);
    CHECK(l1_norm(project(f, closed)) <= l1_norm(f));
  }
}

TEST_CASE("tail projection flattens the interval") {
  const StepFunction f = sf(2, {4, 0, 0, 0});
  CHECK(tail_projection(f, iv(1, 0)) == sf(2, {2, 2, 0, 0}));
  CHECK(tail_projection(StepFunction::zero(2), iv(0, 0)) ==
        StepFunction::zero(2));
  // removing everything below [0,1) leaves only the root component
  HaarExpansion c;
  c.set(iv(0, 0), Rational(1));
  c.set(iv(2, 1), Rational(-2));
  const StepFunction g = synthesize(c, 3);
  CHECK(tail_projection(g, iv(0, 0)) == StepFunction::zero(3));
}

TEST_CASE("tail projection bound from the predecessor coefficients") {
  Rng rng(606);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.range(1, 6);
    const StepFunction f = random_function(rng, n);
    const int level = rng.range(0, n - 1);
    const DyadicInterval i(level, rng.below(std::uint64_t(1) << level));
    const StepFunction tail = tail_projection(f, i);
    CHECK(l1_norm(tail) <= l1_norm(f));

    Rational best = 0;
    DyadicInterval j = i;
    while (auto p = parent(j)) {
      j = *p;
      const Rational c = abs(coefficient(f, j));
      if (c > best) best = c;
      if (j.is_root()) break;
    }
    CHECK(norm_on(tail, i) <= best);

    // the result is constant on i
    const auto& vals = tail.values();
    const std::size_t base = i.index() << (n - level);
    const std::size_t count = std::size_t(1) << (n - level);
    for (std::size_t k = base; k < base + count; ++k) {
      CHECK(vals[k] == vals[base]);
    }
  }
}

TEST_CASE("threshold keeps exactly the large coefficients") {
  const StepFunction f = sf(2, {4, 0, 0, 0});
  {
    const ThresholdResult r = threshold(f, Rational(1));
    CHECK(r.function == f);
    CHECK(r.selected ==
          IntervalSet{DyadicInterval::root(), iv(0, 0), iv(1, 0)});
  }
  {
    const ThresholdResult r = threshold(f, Rational(2));
    CHECK(r.function == StepFunction::zero(2));
    CHECK(r.selected.empty());
  }
  {
    const ThresholdResult r = threshold(StepFunction::zero(2), Rational(1, 2));
    CHECK(r.function == StepFunction::zero(2));
    CHECK(r.selected.empty());
  }
  CHECK_THROWS_AS(threshold(f, Rational(0)), Error);
  CHECK_THROWS_AS(threshold(f, Rational(-1, 2)), Error);
}

TEST_CASE("synthesize matches the pointwise oracle") {
  Rng rng(707);
  for (int t = 0; t < 60; ++t) {
    const int n = rng.range(1, 5);
    const HaarExpansion c = random_expansion(rng, n);
    std::map<DyadicInterval, Rational> coeffs;
    for (const auto& [i, v] : c) coeffs.emplace(i, v);
    CHECK(synthesize(c, n) == oracle::synthesize(coeffs, n));
  }
}

TEST_CASE("lifting preserves the function") {
  const StepFunction f = sf(1, {3, -2});
  const StepFunction g = f.lifted(3);
  CHECK(g.resolution() == 3);
  CHECK(f == g);
  CHECK(l1_norm(f) == l1_norm(g));
  CHECK(analyze(f) == analyze(g));
}
