#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "haarlab/enlargement.hpp"
#include "haarlab/error.hpp"
#include "haarlab/rng.hpp"
#include "haarlab/verification.hpp"
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

StepFunction sparse(Rng& rng, int resolution, int lo_level, int count) {
  HaarExpansion c;
  for (int t = 0; t < 6 * count && static_cast<int>(c.size()) < count; ++t) {
    if (lo_level < 0 && rng.below(6) == 0) {
      c.set(rng.flip() ? DyadicInterval::root() : iv(0, 0),
            rng.nonzero_rational(9, 8));
      continue;
    }
    const int level = rng.range(std::max(lo_level, 0), resolution - 1);
    c.set(DyadicInterval(level, rng.below(std::uint64_t(1) << level)),
          rng.nonzero_rational(9, 8));
  }
  return synthesize(c, resolution);
}

bool contains_all(const IntervalSet& big, const IntervalSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("enlargement climbs while the coefficients stay close") {
  const StepFunction f = sf(2, {4, 0, 0, 0});  // all branch coefficients 1
  CHECK(epsilon_enlargement(f, {iv(1, 0)}, Rational(1, 2)) ==
        IntervalSet{iv(1, 0), iv(0, 0), DyadicInterval::root()});
  CHECK(epsilon_enlargement(f, {}, Rational(1, 2)).empty());

  // a doubled parent coefficient blocks the climb
  HaarExpansion c;
  c.set(iv(0, 0), Rational(2));
  c.set(iv(1, 0), Rational(1));
  const StepFunction g = synthesize(c, 2);
  CHECK(epsilon_enlargement(g, {iv(1, 0)}, Rational(1, 2)) ==
        IntervalSet{iv(1, 0)});
}

TEST_CASE("enlargement rejects selections with vanishing coefficients") {
  const StepFunction f = sf(2, {4, 0, 0, 0});
  CHECK_THROWS_AS(epsilon_enlargement(f, {iv(1, 1)}, Rational(1, 2)), Error);
  CHECK_THROWS_AS(epsilon_enlargement(f, {iv(1, 0)}, Rational(0)), Error);
}

TEST_CASE("enlargement matches the brute-force definition") {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.range(2, 6);
    const StepFunction f = sparse(rng, n, -1, rng.range(1, 6));
    const HaarExpansion c = analyze(f);
    IntervalSet a;
    for (const auto& [i, v] : c) {
      if (rng.flip()) a.insert(i);
    }
    const Rational eps = rng.open_unit_rational(9);
    const IntervalSet fast = epsilon_enlargement(f, a, eps);
    CHECK(fast == oracle::epsilon_enlargement(f, a, eps));
    CHECK(fast == brute_epsilon_enlargement(f, a, eps));
    CHECK(contains_all(fast, a));
  }
}

TEST_CASE("single band run on the worked cases") {
  // every coefficient inside the band: nothing is stripped and the
  // selection swallows the whole support
  {
    HaarExpansion c;
    c.set(iv(1, 0), Rational(3, 2));
    c.set(iv(2, 2), Rational(-3, 2));
    const StepFunction f = synthesize(c, 3);
    const EnlargeResult r =
        band_enlarge(f, c.support(), Rational(1), Rational(1, 2));
    CHECK(contains_all(r.selected, c.support()));
    CHECK(r.certificate.satisfied);
  }
  // empty band: nothing selected, trivially satisfied
  {
    HaarExpansion c;
    c.set(iv(1, 0), Rational(5));
    const StepFunction f = synthesize(c, 2);
    const EnlargeResult r =
        band_enlarge(f, c.support(), Rational(1), Rational(1, 2));
    CHECK(r.selected.empty());
    CHECK(r.certificate.satisfied);
    CHECK(r.certificate.lhs == 0);
  }
  // support touching [0,1) is rejected
  {
    HaarExpansion c;
    c.set(iv(0, 0), Rational(1));
    CHECK_THROWS_AS(band_enlarge(synthesize(c, 2), {}, Rational(1), Rational(1, 2)),
                    Error);
  }
}

TEST_CASE("single band run keeps the sandwich on random instances") {
  Rng rng(32);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.range(2, 6);
    const StepFunction f = sparse(rng, n, 1, rng.range(1, 7));
    const HaarExpansion c = analyze(f);
    IntervalSet a;
    Rational rho(rng.range(1, 6), rng.range(1, 6));
    for (const auto& [i, v] : c) {
      if (rng.flip()) a.insert(i);
      if (rng.below(4) == 0) rho = abs(v) / 2;
    }
    const Rational eps = rng.open_unit_rational(8);
    const EnlargeResult r = band_enlarge(f, a, rho, eps);

    IntervalSet band;
    for (const auto& i : a) {
      const Rational v = abs(c.at(i));
      if (rho < v && v <= 2 * rho) band.insert(i);
    }
    CHECK(contains_all(r.selected, band));
    if (!band.empty()) {
      CHECK(contains_all(oracle::epsilon_enlargement(f, band, eps), r.selected));
    } else {
      CHECK(r.selected.empty());
    }
    CHECK(r.certificate.satisfied);
    CHECK(r.certificate.lhs == l1_norm(project(f, r.selected)));
    CHECK(r.certificate.constant == Rational(45738) / eps);
  }
}

TEST_CASE("bands two apart never meet after enlargement") {
  Rng rng(33);
  for (int t = 0; t < 150; ++t) {
    const int n = rng.range(3, 6);
    const StepFunction f = sparse(rng, n, 1, rng.range(2, 8));
    const HaarExpansion c = analyze(f);
    const Rational eps(1, 3);
    IntervalSet all = c.support();
    std::vector<IntervalSet> enlarged;
    for (int m = 1; m <= 6; ++m) {
      IntervalSet band;
      for (const auto& [i, v] : c) {
        const Rational mag = abs(v);
        if (pow2(-m) < mag && mag <= pow2(1 - m)) band.insert(i);
      }
      enlarged.push_back(band.empty() ? IntervalSet{}
                                      : epsilon_enlargement(f, band, eps));
    }
    for (std::size_t i = 0; i < enlarged.size(); ++i) {
      for (std::size_t j = i + 2; j < enlarged.size(); ++j) {
        for (const auto& x : enlarged[i]) CHECK(enlarged[j].count(x) == 0);
      }
    }
  }
}

TEST_CASE("pipeline on the worked example") {
  const StepFunction f = sf(2, {4, 0, 0, 0});
  const EnlargeResult r =
      construct_enlargement(f, {iv(1, 0)}, Rational(1), Rational(1, 4));
  CHECK(contains_all(r.selected, IntervalSet{iv(1, 0)}));
  const IntervalSet hull{iv(1, 0), iv(0, 0), DyadicInterval::root()};
  CHECK(contains_all(hull, r.selected));
  CHECK(r.certificate.satisfied);

  const EnlargeResult empty =
      construct_enlargement(f, {}, Rational(1), Rational(1, 4));
  CHECK(empty.selected.empty());
  CHECK(empty.certificate.satisfied);
}

TEST_CASE("pipeline preconditions") {
  const StepFunction f = sf(2, {4, 0, 0, 0});
  // (1,1) carries no coefficient, so it sits below any positive floor
  CHECK_THROWS_AS(
      construct_enlargement(f, {iv(1, 1)}, Rational(1), Rational(1, 4)), Error);
  CHECK_THROWS_AS(
      construct_enlargement(f, {iv(1, 0)}, Rational(0), Rational(1, 4)), Error);
  CHECK_THROWS_AS(
      construct_enlargement(f, {iv(1, 0)}, Rational(1), Rational(1)), Error);
  CHECK_THROWS_AS(construct_enlargement(StepFunction::zero(2), {iv(1, 0)},
                                        Rational(1), Rational(1, 2)),
                  Error);
}

TEST_CASE("pipeline on the left-branch family") {
  for (int n = 1; n <= 3; ++n) {
    const ExampleResult ex = left_branch_example(n);
    for (const Rational eps : {Rational(1, 4), Rational(2, 3)}) {
      const EnlargeResult r =
          construct_enlargement(ex.f, ex.a, Rational(1), eps);
      CHECK(contains_all(r.selected, ex.a));
      CHECK(contains_all(oracle::epsilon_enlargement(ex.f, ex.a, eps),
                         r.selected));
      CHECK(r.certificate.satisfied);
    }
    // the maximal enlargement of the selection is the whole branch: every
    // coefficient along it equals 1
    IntervalSet branch{DyadicInterval::root()};
    for (int level = 0; level < 2 * n; ++level) branch.insert(iv(level, 0));
    CHECK(epsilon_enlargement(ex.f, ex.a, Rational(1, 2)) == branch);
  }
}

TEST_CASE("band boundaries are half-open exactly") {
  // 2*rho belongs to the band, rho itself does not
  HaarExpansion c;
  c.set(iv(1, 0), Rational(1));
  c.set(iv(1, 1), Rational(1, 2));
  const StepFunction f = synthesize(c, 2);
  const EnlargeResult r =
      band_enlarge(f, c.support(), Rational(1, 2), Rational(1, 4));
  CHECK(r.certificate.bands[0].band == IntervalSet{iv(1, 0)});
  CHECK(r.selected == IntervalSet{iv(1, 0)});
}

TEST_CASE("a selection member sitting exactly on the floor still lands in a band") {
  HaarExpansion c;
  c.set(iv(1, 0), Rational(1));
  const StepFunction f = synthesize(c, 2);
  const EnlargeResult r =
      construct_enlargement(f, {iv(1, 0)}, Rational(1), Rational(1, 4));
  // the floor is halved internally, adding one band
  CHECK(r.certificate.m0 == 2);
  CHECK(r.selected == IntervalSet{iv(1, 0)});
  CHECK(r.certificate.satisfied);
}

TEST_CASE("even bands are collected from the odd-pass remainder") {
  HaarExpansion c;
  c.set(iv(1, 0), Rational(1));        // band 1 (odd)
  c.set(iv(2, 0), Rational(1, 3));     // band 2 (even)
  const StepFunction f = synthesize(c, 3);
  const EnlargeResult r =
      construct_enlargement(f, c.support(), Rational(1, 4), Rational(1, 4));
  CHECK(r.certificate.m0 == 3);
  CHECK(r.certificate.odd_pass_count == 2);
  CHECK(r.certificate.even_pass_count == 1);
  CHECK(r.selected == c.support());
  bool saw_even_member = false;
  for (const auto& band : r.certificate.bands) {
    if (band.m == 2 && band.band.count(iv(2, 0)) > 0) saw_even_member = true;
  }
  CHECK(saw_even_member);
}

TEST_CASE("pipeline sandwich and certificate on random instances") {
  Rng rng(34);
  for (int t = 0; t < 150; ++t) {
    const int n = rng.range(2, 6);
    const StepFunction f = sparse(rng, n, -1, rng.range(1, 7));
    const HaarExpansion c = analyze(f);
    if (c.empty()) continue;
    std::vector<Rational> mags;
    for (const auto& [i, v] : c) mags.push_back(abs(v));
    std::sort(mags.begin(), mags.end());
    Rational delta = mags[rng.below(mags.size())];
    if (rng.flip()) delta /= 2;
    IntervalSet a;
    for (const auto& [i, v] : c) {
      if (abs(v) >= delta && rng.flip()) a.insert(i);
    }
    const Rational eps = rng.open_unit_rational(8);
    const EnlargeResult r = construct_enlargement(f, a, delta, eps);
    CHECK(contains_all(r.selected, a));
    if (!a.empty()) {
      CHECK(contains_all(oracle::epsilon_enlargement(f, a, eps), r.selected));
    } else {
      CHECK(r.selected.empty());
    }
    CHECK(r.certificate.satisfied);
    CHECK(r.certificate.lhs == l1_norm(project(f, r.selected)));
    CHECK(r.certificate.odd_pass_count >= r.certificate.even_pass_count);
  }
}

TEST_CASE("parameter records validate their ranges") {
  EnlargeParams p;
  p.delta = Rational(1, 2);
  p.epsilon = Rational(1, 3);
  CHECK_NOTHROW(p.validate());
  p.alpha = Rational(2);
  CHECK_THROWS_AS(p.validate(), Error);
  p.alpha = Rational(1);
  p.rho = Rational(0);
  CHECK_THROWS_AS(p.validate(), Error);
  p.rho = Rational(1, 8);
  p.epsilon = Rational(1);
  CHECK_THROWS_AS(p.validate(), Error);
}
