#include "haarlab/enlargement.hpp"

#include <algorithm>
#include <utility>

#include "haarlab/error.hpp"

namespace haarlab {

void EnlargeParams::validate() const {
  if (delta <= 0) fail(Errc::invalid_parameter, "delta must be positive");
  if (epsilon <= 0 || epsilon >= 1) {
    fail(Errc::invalid_parameter, "epsilon must lie in (0,1)");
  }
  if (alpha && (*alpha <= 0 || *alpha > 1)) {
    fail(Errc::invalid_parameter, "alpha must lie in (0,1]");
  }
  if (rho && *rho <= 0) fail(Errc::invalid_parameter, "rho must be positive");
  if (band_scale && *band_scale <= 0) {
    fail(Errc::invalid_parameter, "band scale must be positive");
  }
}

IntervalSet epsilon_enlargement(const StepFunction& f, const IntervalSet& a,
                                const Rational& eps) {
  if (eps <= 0) fail(Errc::invalid_parameter, "tolerance must be positive");
  const HaarExpansion coeffs = analyze(f);

  std::string offenders;
  for (const auto& i : a) {
    if (coeffs.at(i) == 0) offenders += (offenders.empty() ? "" : ", ") + i.str();
  }
  if (!offenders.empty()) {
    fail(Errc::zero_coefficient,
         "zero coefficient under the selection at: " + offenders);
  }

  IntervalSet out;
  for (const auto& i : a) {
    const Rational base = coeffs.at(i);
    const Rational bound = eps * abs(base);
    DyadicInterval j = i;
    while (true) {
      out.insert(j);
      const auto up = parent(j);
      // Climbing one step adds exactly the parent to the chain [i, j].
      if (!up || abs(coeffs.at(*up) - base) >= bound) break;
      j = *up;
    }
  }
  return out;
}

namespace {

void require_no_top_support(const HaarExpansion& coeffs,
                            const char* where) {
  if (coeffs.contains(DyadicInterval::root()) ||
      coeffs.contains(DyadicInterval(0, 0))) {
    fail(Errc::precondition,
         std::string(where) + " requires support inside level >= 1");
  }
}

}  // namespace

EnlargeResult band_enlarge(const StepFunction& f, const IntervalSet& a,
                           const Rational& rho, const Rational& eps) {
  if (rho <= 0) fail(Errc::invalid_parameter, "rho must be positive");
  if (eps <= 0 || eps >= 1) {
    fail(Errc::invalid_parameter, "epsilon must lie in (0,1)");
  }
  const HaarExpansion coeffs = analyze(f);
  require_no_top_support(coeffs, "band_enlarge");

  // Strip everything reachable from the large coefficients at tolerance 1/3.
  IntervalSet large;
  for (const auto& [i, v] : coeffs) {
    if (abs(v) > 3 * rho) large.insert(i);
  }
  const IntervalSet large_enlarged =
      epsilon_enlargement(f, large, Rational(1, 3));
  HaarExpansion remainder;
  for (const auto& [i, v] : coeffs) {
    if (large_enlarged.count(i) == 0) remainder.set(i, v);
  }
  const StepFunction g = synthesize(remainder, f.resolution());

  IntervalSet band;
  for (const auto& i : a) {
    const Rational v = abs(remainder.at(i));
    if (rho < v && v <= 2 * rho) band.insert(i);
  }
  IntervalSet selected = epsilon_enlargement(g, band, eps);

  BoundCertificate cert;
  cert.lhs = l1_norm(project(f, selected));
  cert.rhs_norm = l1_norm(f);
  cert.constant = Rational(45738) / eps;
  cert.selected = selected;
  cert.bands.push_back({0, band, selected});
  cert.satisfied = cert.lhs <= cert.constant * cert.rhs_norm;
  return {std::move(selected), std::move(cert)};
}

EnlargeResult band_enlarge(const StepFunction& f, const IntervalSet& a,
                           const EnlargeParams& params) {
  params.validate();
  if (!params.rho) {
    fail(Errc::invalid_parameter, "band run needs a band scale rho");
  }
  return band_enlarge(f, a, *params.rho, params.epsilon);
}

EnlargeResult construct_enlargement(const StepFunction& f,
                                    const IntervalSet& a,
                                    const EnlargeParams& params) {
  params.validate();
  return construct_enlargement(f, a, params.delta, params.epsilon);
}

EnlargeResult construct_enlargement(const StepFunction& f,
                                    const IntervalSet& a,
                                    const Rational& delta,
                                    const Rational& eps) {
  if (delta <= 0) fail(Errc::invalid_parameter, "delta must be positive");
  if (eps <= 0 || eps >= 1) {
    fail(Errc::invalid_parameter, "epsilon must lie in (0,1)");
  }
  const HaarExpansion coeffs = analyze(f);
  for (const auto& i : a) {
    if (abs(coeffs.at(i)) < delta) {
      fail(Errc::precondition, "selected interval " + i.str() +
                                   " has |coefficient| " +
                                   to_string(abs(coeffs.at(i))) +
                                   " below the floor " + to_string(delta));
    }
  }

  // The chain argument needs a tolerance strictly below 1/3; shrinking the
  // tolerance only shrinks every enlargement, so the sandwich survives.
  const Rational eps_eff = std::min(eps, Rational(997, 3000));
  const Rational c_eps = Rational(45738) / eps_eff;

  // Split off the root and [0,1): the banded argument assumes support
  // inside level >= 1. Selected members up there rejoin at the end.
  const DyadicInterval top(0, 0);
  IntervalSet split_off;
  IntervalSet a_core;
  for (const auto& i : a) {
    if (i.is_root() || i == top) {
      split_off.insert(i);
    } else {
      a_core.insert(i);
    }
  }
  HaarExpansion core = coeffs;
  core.set(DyadicInterval::root(), Rational(0));
  core.set(top, Rational(0));

  BoundCertificate cert;
  cert.rhs_norm = l1_norm(f);

  if (a_core.empty()) {
    cert.selected = split_off;
    cert.lhs = l1_norm(project(f, split_off));
    cert.constant = Rational(2);
    cert.satisfied = cert.lhs <= cert.constant * cert.rhs_norm;
    return {split_off, std::move(cert)};
  }

  Rational scale = 0;
  for (const auto& [i, v] : core) {
    const Rational magnitude = abs(v);
    if (magnitude > scale) scale = magnitude;
  }
  HaarExpansion scaled;
  for (const auto& [i, v] : core) scaled.set(i, v / scale);
  const StepFunction f2 = synthesize(scaled, f.resolution());
  Rational floor = delta / scale;

  // Strict band bounds drop a member sitting exactly on the floor; halving
  // once restores coverage at the cost of one extra band.
  for (const auto& i : a_core) {
    if (abs(scaled.at(i)) == floor) {
      floor /= 2;
      break;
    }
  }

  int m0 = 1;
  while (pow2(-m0) >= floor) ++m0;
  cert.m0 = m0;

  IntervalSet odd_union;
  for (int m = 1; m <= m0; m += 2) {
    EnlargeResult band = band_enlarge(f2, a_core, pow2(-m), eps_eff);
    odd_union.insert(band.selected.begin(), band.selected.end());
    cert.bands.push_back(
        {m, std::move(band.certificate.bands[0].band), std::move(band.selected)});
    ++cert.odd_pass_count;
  }

  HaarExpansion remainder;
  for (const auto& [i, v] : scaled) {
    if (odd_union.count(i) == 0) remainder.set(i, v);
  }
  const StepFunction g = synthesize(remainder, f.resolution());
  IntervalSet a_rest;
  for (const auto& i : a_core) {
    if (odd_union.count(i) == 0) a_rest.insert(i);
  }

  IntervalSet selected = odd_union;
  for (int m = 2; m <= m0; m += 2) {
    EnlargeResult band = band_enlarge(g, a_rest, pow2(-m), eps_eff);
    selected.insert(band.selected.begin(), band.selected.end());
    cert.bands.push_back(
        {m, std::move(band.certificate.bands[0].band), std::move(band.selected)});
    ++cert.even_pass_count;
  }
  selected.insert(split_off.begin(), split_off.end());

  const Rational passes((m0 + 1) / 2);  // ceil(m0 / 2)
  cert.selected = selected;
  cert.lhs = l1_norm(project(f, selected));
  cert.constant =
      c_eps * passes + passes * c_eps * (1 + c_eps * passes) + 2;
  cert.satisfied = cert.lhs <= cert.constant * cert.rhs_norm;
  return {std::move(selected), std::move(cert)};
}

}  // namespace haarlab
