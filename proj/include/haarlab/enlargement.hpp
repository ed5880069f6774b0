#pragma once

#include <optional>
#include <vector>

#include "haarlab/dyadic.hpp"
#include "haarlab/haar.hpp"
#include "haarlab/rational.hpp"
#include "haarlab/step_function.hpp"

namespace haarlab {

struct EnlargeParams {
  Rational delta;                 // threshold floor, > 0
  Rational epsilon;               // relative-variation tolerance, in (0,1)
  std::optional<Rational> alpha;  // in (0,1]
  std::optional<Rational> rho;    // > 0
  std::optional<Rational> band_scale;  // > 0

  void validate() const;  // Errc::invalid_parameter on violations
};

struct BandRecord {
  int m = 0;  // band exponent; 0 for a single-band run
  IntervalSet band;
  IntervalSet enlarged;
};

// Exact record of one projection-bound instance: satisfied is precisely
// lhs <= constant * rhs_norm, compared with rationals.
struct BoundCertificate {
  Rational lhs;
  Rational rhs_norm;
  Rational constant;
  IntervalSet selected;
  std::vector<BandRecord> bands;
  bool satisfied = false;
  int m0 = 0;
  int odd_pass_count = 0;
  int even_pass_count = 0;
};

// The epsilon-enlargement of a: every J reachable upward from some I in a
// along a chain whose coefficients all stay strictly within relative
// distance eps of c_I(f). Comparisons are |c_K - c_I| < eps * |c_I|, exact.
// Every I in a must have c_I(f) != 0 (Errc::zero_coefficient, offenders
// listed); eps must be positive.
IntervalSet epsilon_enlargement(const StepFunction& f, const IntervalSet& a,
                                const Rational& eps);

struct EnlargeResult {
  IntervalSet selected;
  BoundCertificate certificate;
};

// One coefficient band (rho, 2*rho]: strips the coefficients reachable from
// {|c| > 3*rho} at tolerance 1/3, then enlarges the surviving band members
// of a at tolerance eps. Guarantees B <= selected <= B_eps(f) for
// B = a intersect {rho < |c_I(f)| <= 2*rho}, with the certificate bound
// 45738/eps. Requires supp(f) inside level >= 1 (no root, no [0,1)
// coefficient), rho > 0, eps in (0,1).
EnlargeResult band_enlarge(const StepFunction& f, const IntervalSet& a,
                           const Rational& rho, const Rational& eps);

// Same run driven by a validated parameter record (rho required).
EnlargeResult band_enlarge(const StepFunction& f, const IntervalSet& a,
                           const EnlargeParams& params);

// Full banded pipeline: splits off root/[0,1) coefficients, rescales so the
// largest remaining coefficient is 1, runs band_enlarge over the odd bands
// of f and then the even bands of the odd-pass remainder, and reattaches
// the split-off members of a. Guarantees a <= selected <= a_eps(f) and an
// exact certificate with the explicit chain constant. Preconditions:
// a inside {|c_I(f)| >= delta}, delta > 0, eps in (0,1) (internally capped
// below 1/3; shrinking eps only shrinks the enlargement).
EnlargeResult construct_enlargement(const StepFunction& f,
                                    const IntervalSet& a,
                                    const Rational& delta,
                                    const Rational& eps);

EnlargeResult construct_enlargement(const StepFunction& f,
                                    const IntervalSet& a,
                                    const EnlargeParams& params);

}  // namespace haarlab
