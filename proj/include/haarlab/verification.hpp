#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "haarlab/dyadic.hpp"
#include "haarlab/enlargement.hpp"
#include "haarlab/rational.hpp"
#include "haarlab/rng.hpp"
#include "haarlab/step_function.hpp"

namespace haarlab {

// One randomized-verification run of a single statement. All inequality
// evaluations are exact; worst_ratio is the largest lhs/rhs encountered
// with the statement normalized to lhs <= rhs (so worst_ratio <= 1 iff
// violations == 0 whenever it is defined).
struct CheckReport {
  std::string statement;
  long trials = 0;
  long violations = 0;
  Rational worst_ratio;
  bool worst_ratio_defined = false;
  std::uint64_t seed = 0;
  int resolution = 0;
  double elapsed_seconds = 0.0;
  std::string witness;  // JSON text of the worst instance seen ("" if none)
};

// ---- Randomized instances -------------------------------------------------

// A chain I > J > K (direct steps when `direct`) plus an arbitrary f.
struct ChainInstance {
  StepFunction f;
  DyadicInterval i{0, 0}, j{0, 0}, k{0, 0};
  bool direct = true;
};

// Disjointly supported pair; which extra fields are meaningful depends on
// the statement the instance was generated for.
struct PairInstance {
  StepFunction f, g;
  IntervalSet frontier;                          // target frontier set
  std::map<DyadicInterval, DyadicInterval> witnesses;  // per-frontier witness
  Rational alpha, eps;
  DyadicInterval pivot{0, 0};  // symmetrization interval
};

struct BandedInstance {
  StepFunction h;
  IntervalSet s;
  Rational alpha, b, eps;
};

struct GeneralInstance {
  StepFunction f;
  IntervalSet a;
  Rational delta, rho, eps;
};

struct SetInstance {
  IntervalSet family;
};

using Instance = std::variant<ChainInstance, PairInstance, BandedInstance,
                              GeneralInstance, SetInstance>;

enum class InstanceKind { chain, disjoint_pair, banded, general, interval_set };

InstanceKind instance_kind_from_name(const std::string& name);

// Optional constraints for the generators; unset fields are sampled.
struct GenParams {
  std::optional<Rational> alpha;       // floor profile for banded / pair kinds
  std::optional<Rational> band_scale;  // the banded kind's ceiling b
};

// Deterministic per (kind, seed, resolution, params); every generator
// re-validates the hypotheses of its target statement before returning and
// throws Errc::invalid_parameter if they cannot be met.
Instance gen_instance(InstanceKind kind, std::uint64_t seed, int resolution,
                      const GenParams& params = {});

// ---- Checkers ---------------------------------------------------------------

// Known ids: lemma-3.1 lemma-3.2 lemma-3.3 prop-3.3a lemma-3.4 lemma-3.5
// full-symmetrization thm-3.8 cor-3.9 thm-2.2.
const std::vector<std::string>& statement_ids();

CheckReport check(const std::string& statement, long trials,
                  std::uint64_t seed, int resolution,
                  const GenParams& params = {});

// ---- Explicit example families ---------------------------------------------

struct ExampleResult {
  StepFunction f;
  IntervalSet a;
  Rational f_norm;
  Rational projection_norm;
};

// Left-branch family: all coefficients 1 along [0,1] -> ... -> level 2n-1,
// selecting the root and the odd levels. ||f|| = 1 exactly while the
// selected projection grows ~ n.
ExampleResult left_branch_example(int n);

// Distributed variant: the same coefficient profile spread over the tree so
// that every selected interval's parent coefficient vanishes; the
// enlargement of the selection is the selection itself for every tolerance
// in (0,1) (verified for a fixed sample of tolerances before returning).
ExampleResult distributed_example(int n);

// Brute-force evaluation of the enlargement definition: enumerates every
// candidate interval up to the resolution and tests the chain condition
// directly. Quadratic and only for verification; the library path is
// epsilon_enlargement.
IntervalSet brute_epsilon_enlargement(const StepFunction& f,
                                      const IntervalSet& a,
                                      const Rational& eps);

}  // namespace haarlab
