#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haarlab/error.hpp"
#include "haarlab/haar.hpp"
#include "haarlab/json_io.hpp"
#include "haarlab/verification.hpp"
#include "oracle.hpp"

using namespace haarlab;

TEST_CASE("left branch family matches the frozen values") {
  {
    const ExampleResult ex = left_branch_example(1);
    CHECK(ex.f_norm == 1);
    CHECK(ex.projection_norm == Rational(3, 2));
    CHECK(ex.f == StepFunction(2, {Rational(4), Rational(0), Rational(0),
                                   Rational(0)}));
    CHECK(ex.a == IntervalSet{DyadicInterval::root(), DyadicInterval(1, 0)});
    // recomputed with the pointwise oracle
    CHECK(oracle::l1_norm(ex.f) == 1);
    std::map<DyadicInterval, Rational> kept;
    for (const auto& i : ex.a) kept.emplace(i, oracle::coefficient(ex.f, i));
    CHECK(oracle::l1_norm(oracle::synthesize(kept, ex.f.resolution())) ==
          Rational(3, 2));
  }
  {
    const ExampleResult ex = left_branch_example(2);
    CHECK(ex.f_norm == 1);
    CHECK(ex.projection_norm == Rational(17, 8));
  }
}

TEST_CASE("left branch projection norms grow by at least a half") {
  Rational prev = 0;
  for (int n = 1; n <= 6; ++n) {
    const ExampleResult ex = left_branch_example(n);
    CHECK(ex.f_norm == 1);
    if (n > 1) CHECK(ex.projection_norm - prev >= Rational(1, 2));
    prev = ex.projection_norm;
  }
  CHECK_THROWS_AS(left_branch_example(0), Error);
  CHECK_THROWS_AS(left_branch_example(100), Error);
}

TEST_CASE("distributed family matches the left branch distributionally") {
  const ExampleResult ex = distributed_example(1);
  CHECK(ex.f_norm == 1);
  CHECK(ex.projection_norm == Rational(3, 2));
  CHECK(ex.a.size() == 5);  // root plus the four deepest selected intervals
  for (const Rational eps : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    CHECK(epsilon_enlargement(ex.f, ex.a, eps) == ex.a);
  }
  // agreement with the fully independent enlargement
  CHECK(oracle::epsilon_enlargement(ex.f, ex.a, Rational(1, 2)) == ex.a);

  const ExampleResult ex2 = distributed_example(2);
  CHECK(ex2.f_norm == 1);
  CHECK(ex2.projection_norm == Rational(17, 8));
  CHECK(ex2.projection_norm > ex.projection_norm);
  CHECK_THROWS_AS(distributed_example(0), Error);
  CHECK_THROWS_AS(distributed_example(20), Error);
}

TEST_CASE("reports are reproducible bit for bit") {
  const CheckReport a = check("lemma-3.1", 50, 7, 6);
  const CheckReport b = check("lemma-3.1", 50, 7, 6);
  CHECK(a.trials == 50);
  CHECK(a.violations == b.violations);
  CHECK(a.worst_ratio == b.worst_ratio);
  CHECK(a.witness == b.witness);
  CHECK(to_json(a).dump() == to_json(b).dump());

  const CheckReport c = check("lemma-3.1", 50, 8, 6);
  CHECK(to_json(a).dump() != to_json(c).dump());
}

TEST_CASE("every statement passes a short randomized run") {
  for (const auto& id : statement_ids()) {
    const CheckReport r = check(id, 60, 17, 6);
    INFO(id);
    CHECK(r.trials == 60);
    CHECK(r.violations == 0);
    if (r.worst_ratio_defined) CHECK(r.worst_ratio <= 1);
  }
  CHECK_THROWS_AS(check("lemma-9.9", 10, 1, 6), Error);
  CHECK_THROWS_AS(check("lemma-3.1", 10, 1, 1), Error);
}

TEST_CASE("generated instances satisfy their hypotheses") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    {
      const auto inst = gen_instance(InstanceKind::chain, seed, 6);
      const auto& c = std::get<ChainInstance>(inst);
      CHECK(strict_subset(c.k, c.j));
      CHECK(strict_subset(c.j, c.i));
      if (c.direct) {
        CHECK(*parent(c.k) == c.j);
        CHECK(*parent(c.j) == c.i);
      }
    }
    {
      const auto inst = gen_instance(InstanceKind::disjoint_pair, seed, 6);
      const auto& p = std::get<PairInstance>(inst);
      const HaarExpansion cf = analyze(p.f);
      const HaarExpansion cg = analyze(p.g);
      for (const auto& [i, v] : cf) CHECK(!cg.contains(i));
      for (const auto& i : p.frontier) {
        const DyadicInterval j = p.witnesses.at(i);
        CHECK(abs(cf.at(j)) >= p.alpha);
        CHECK(abs(cg.at(i) - cf.at(j)) >= p.eps * abs(cf.at(j)));
        for (const auto& k : segment(j, i)) {
          if (k != i) CHECK(p.frontier.count(k) == 0);
        }
      }
    }
    {
      const auto inst = gen_instance(InstanceKind::banded, seed, 6);
      const auto& b = std::get<BandedInstance>(inst);
      const HaarExpansion ch = analyze(b.h);
      CHECK(!ch.contains(DyadicInterval::root()));
      CHECK(!ch.contains(DyadicInterval(0, 0)));
      for (const auto& [i, v] : ch) {
        if (b.s.count(i) > 0) {
          CHECK(abs(v) >= b.alpha * b.b);
        } else {
          CHECK(abs(v) <= b.b);
        }
      }
    }
    {
      const auto inst = gen_instance(InstanceKind::general, seed, 6);
      const auto& g = std::get<GeneralInstance>(inst);
      for (const auto& i : g.a) {
        CHECK(abs(coefficient(g.f, i)) >= g.delta);
      }
      CHECK(g.eps > 0);
      CHECK(g.eps < 1);
    }
    {
      const auto inst = gen_instance(InstanceKind::interval_set, seed, 6);
      CHECK(!std::get<SetInstance>(inst).family.empty());
    }
  }
}

TEST_CASE("instance kinds parse from their names") {
  CHECK(instance_kind_from_name("chain") == InstanceKind::chain);
  CHECK(instance_kind_from_name("disjoint-pair") == InstanceKind::disjoint_pair);
  CHECK(instance_kind_from_name("banded") == InstanceKind::banded);
  CHECK(instance_kind_from_name("general") == InstanceKind::general);
  CHECK(instance_kind_from_name("interval-set") == InstanceKind::interval_set);
  CHECK_THROWS_AS(instance_kind_from_name("nonsense"), Error);
}
