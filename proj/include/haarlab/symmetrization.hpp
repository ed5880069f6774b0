#pragma once

#include <utility>
#include <vector>

#include "haarlab/dyadic.hpp"
#include "haarlab/haar.hpp"
#include "haarlab/step_function.hpp"

namespace haarlab {

enum class Branch { left, right };
enum class Mode { strict, permissive };

const char* branch_name(Branch b);

// ||f||_{I+} - ||f||_{I-}. Not defined for the root.
Rational norm_imbalance(const StepFunction& f, const DyadicInterval& i);

// Overwrites I- with the pattern of I+ shifted by m(I)/2 (left), or I+
// with the pattern of I- (right). Intended for c_I(f) = 0: then the
// coefficient rewrite is exact (coefficients above i and disjoint from i
// unchanged, c_i stays 0) and the norm changes by +/- the imbalance. In
// strict mode a nonzero c_I(f) throws Errc::zero_coefficient.
StepFunction symmetrize_left(const StepFunction& f, const DyadicInterval& i,
                             Mode mode = Mode::strict);
StepFunction symmetrize_right(const StepFunction& f, const DyadicInterval& i,
                              Mode mode = Mode::strict);

struct PairStepResult {
  StepFunction f;
  StepFunction g;
  Branch branch;
};

// Symmetrizes both functions on i with the same branch, chosen so that the
// ratio ||f|| / ||f+g|| never decreases and ||f'+g'|| stays positive.
// Preconditions (checked): c_i(f) = c_i(g) = 0, no root coefficients,
// disjoint Haar supports, ||f|| > 0.
PairStepResult symmetrize_pair_step(const StepFunction& f,
                                    const StepFunction& g,
                                    const DyadicInterval& i,
                                    Mode mode = Mode::strict);

// {I : c_I(f) = 0 but c_{I+}(f) != 0 or c_{I-}(f) != 0}; root excluded.
IntervalSet zero_frontier(const StepFunction& f);

struct SymmetrizedPair {
  StepFunction f_tilde;
  StepFunction g_tilde;
  std::vector<std::pair<DyadicInterval, Branch>> trace;
};

// Runs the pair step over the zero frontier of f in measure-ascending order
// (ties by index). Preconditions (checked): ||f|| > 0, disjoint supports
// with no root / [0,1) coefficients, supp(g) disjoint from the frontier.
// The output is re-verified from the definitions: zero top coefficients,
// left/right symmetry and c(g~)=0 on the final frontier, disjoint supports,
// coefficient values inherited, ratio never decreased; any failure throws
// Errc::verification_failed.
SymmetrizedPair full_symmetrize(const StepFunction& f, const StepFunction& g,
                                Mode mode = Mode::strict);

// True when f(x) = f(x - m(I)/2) on I-, i.e. the two halves of i carry the
// same pattern.
bool symmetric_on(const StepFunction& f, const DyadicInterval& i);

}  // namespace haarlab
