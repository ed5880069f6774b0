#include "haarlab/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "haarlab/config.hpp"
#include "haarlab/error.hpp"
#include "haarlab/json_io.hpp"
#include "haarlab/symmetrization.hpp"

namespace haarlab {

namespace {

using nlohmann::json;

// ---- shared sampling helpers -----------------------------------------------

StepFunction random_dense(Rng& rng, int resolution) {
  std::vector<Rational> vals(std::size_t(1) << resolution);
  for (auto& v : vals) {
    if (rng.below(2) == 0) continue;  // keep plenty of flat cells
    v = rng.nonzero_rational(8, 8);
  }
  return StepFunction(resolution, std::move(vals));
}

DyadicInterval random_interval(Rng& rng, int lo_level, int hi_level) {
  const int level = rng.range(lo_level, hi_level);
  return DyadicInterval(level, rng.below(std::uint64_t(1) << level));
}

// Distinct intervals with levels in [lo_level, hi_level], avoiding `avoid`.
IntervalSet sample_intervals(Rng& rng, int count, int lo_level, int hi_level,
                             const IntervalSet& avoid) {
  IntervalSet out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < 40 * count) {
    ++attempts;
    DyadicInterval i = random_interval(rng, lo_level, hi_level);
    if (avoid.count(i) == 0) out.insert(i);
  }
  return out;
}

DyadicInterval random_child(Rng& rng, const DyadicInterval& i) {
  if (i.is_root()) return DyadicInterval(0, 0);
  const Halves h = halves(i, kHardMaxLevel);
  return rng.flip() ? h.left : *h.right;
}

DyadicInterval descend(Rng& rng, DyadicInterval i, int steps) {
  for (int s = 0; s < steps; ++s) i = random_child(rng, i);
  return i;
}

json interval_set_witness(const IntervalSet& s) { return to_json(s); }

// ---- chain instances (norm vs coefficient-gap lemmas) ------------------------

ChainInstance gen_chain(Rng& rng, int resolution, bool direct) {
  ChainInstance out;
  const int r = rng.range(2, resolution);
  out.f = random_dense(rng, r);
  out.direct = direct;
  if (direct) {
    out.i = rng.below(8) == 0 ? DyadicInterval::root()
                              : random_interval(rng, 0, r - 2);
    out.j = random_child(rng, out.i);
    out.k = random_child(rng, out.j);
  } else {
    const bool from_root = rng.below(8) == 0;
    const int base = from_root ? -1 : rng.range(0, r - 2);
    out.i = from_root ? DyadicInterval::root()
                      : random_interval(rng, base, base);
    const int d1 = rng.range(1, r - 1 - base);
    const int d2 = rng.range(1, r - base - d1);
    out.j = descend(rng, out.i, d1);
    out.k = descend(rng, out.j, d2);
  }
  if (!strict_subset(out.k, out.j) || !strict_subset(out.j, out.i)) {
    fail(Errc::invalid_parameter, "chain generator produced a non-chain");
  }
  return out;
}

json chain_witness(const ChainInstance& c) {
  return json{{"f", to_json(c.f)},
              {"I", c.i.str()},
              {"J", c.j.str()},
              {"K", c.k.str()},
              {"direct", c.direct}};
}

// ---- interval-set instances ---------------------------------------------------

SetInstance gen_interval_set(Rng& rng, int resolution) {
  SetInstance out;
  const int count = rng.range(1, 30);
  for (int t = 0; t < count; ++t) {
    if (rng.below(16) == 0) {
      out.family.insert(DyadicInterval::root());
    } else {
      out.family.insert(random_interval(rng, 0, resolution));
    }
  }
  return out;
}

// ---- disjointly supported pairs ------------------------------------------------

// Instance for the frontier-counting bound: F plus per-member witnesses.
PairInstance gen_frontier_pair(Rng& rng, int resolution) {
  PairInstance out;
  const int r = std::max(3, rng.range(3, resolution));
  out.alpha = rng.open_unit_rational(8);
  out.eps = rng.open_unit_rational(8);

  IntervalSet family;
  const int want = rng.range(1, 6);
  for (int t = 0; t < want; ++t) {
    if (rng.below(12) == 0) {
      family.insert(DyadicInterval::root());
    } else {
      family.insert(random_interval(rng, 0, r - 2));
    }
  }

  HaarExpansion cf, cg;
  IntervalSet kept;
  for (const auto& i : family) {
    // Witness: a descendant whose whole chain back to i avoids the family.
    DyadicInterval j = random_child(rng, i);
    if (family.count(j) > 0) {
      const auto h =
          i.is_root() ? Halves{DyadicInterval(0, 0), std::nullopt}
                      : halves(i, kHardMaxLevel);
      DyadicInterval other = h.right && family.count(*h.right) == 0
                                 ? *h.right
                                 : h.left;
      if (family.count(other) > 0) continue;  // boxed in; drop this member
      j = other;
    }
    while (j.level() < r - 1 && rng.flip()) {
      const DyadicInterval deeper = random_child(rng, j);
      if (family.count(deeper) > 0) break;
      j = deeper;
    }
    kept.insert(i);
    out.witnesses.emplace(i, j);
    const Rational extra(rng.range(0, 8), 4);
    cf.set(j, (rng.flip() ? 1 : -1) * out.alpha * (1 + extra));
  }
  for (const auto& i : kept) {
    if (rng.flip()) continue;  // zero already satisfies the gap condition
    const Rational u(rng.range(0, 4), 2);
    const Rational sign = rng.flip() ? 1 : -1;
    const Rational base = cf.at(out.witnesses.at(i));
    cg.set(i, base * (1 + sign * out.eps * (1 + u)));
  }

  // Noise: f anywhere unused, g anywhere unused and off the family.
  IntervalSet used = cf.support();
  for (const auto& [i, v] : cg) used.insert(i);
  for (const auto& i : sample_intervals(rng, rng.range(0, 3), 0, r - 1, used)) {
    cf.set(i, rng.nonzero_rational(8, 8));
    used.insert(i);
  }
  IntervalSet g_avoid = used;
  g_avoid.insert(kept.begin(), kept.end());
  g_avoid.insert(family.begin(), family.end());
  for (const auto& i :
       sample_intervals(rng, rng.range(0, 3), 0, r - 1, g_avoid)) {
    cg.set(i, rng.nonzero_rational(8, 8));
  }

  out.frontier = kept;
  out.f = synthesize(cf, r);
  out.g = synthesize(cg, r);

  // Re-validate the hypotheses from scratch.
  const HaarExpansion vf = analyze(out.f);
  const HaarExpansion vg = analyze(out.g);
  for (const auto& [i, v] : vf) {
    if (vg.contains(i)) fail(Errc::invalid_parameter, "supports overlap");
  }
  for (const auto& i : kept) {
    const DyadicInterval j = out.witnesses.at(i);
    for (const auto& k : segment(j, i)) {
      if (k != i && kept.count(k) > 0) {
        fail(Errc::invalid_parameter, "witness chain hits the family");
      }
    }
    if (abs(vf.at(j)) < out.alpha) {
      fail(Errc::invalid_parameter, "witness coefficient below alpha");
    }
    if (abs(vg.at(i) - vf.at(j)) < out.eps * abs(vf.at(j))) {
      fail(Errc::invalid_parameter, "gap condition failed");
    }
  }
  return out;
}

// Instance for one symmetrization step: pivot with vanishing coefficients.
PairInstance gen_pivot_pair(Rng& rng, int resolution) {
  PairInstance out;
  const int r = rng.range(2, resolution);
  out.pivot = random_interval(rng, 0, r - 2);

  HaarExpansion cf, cg;
  IntervalSet used{out.pivot};
  for (const auto& i :
       sample_intervals(rng, rng.range(1, 5), 0, r - 1, used)) {
    cf.set(i, rng.nonzero_rational(8, 8));
    used.insert(i);
  }
  for (const auto& i :
       sample_intervals(rng, rng.range(0, 4), 0, r - 1, used)) {
    cg.set(i, rng.nonzero_rational(8, 8));
  }
  out.f = synthesize(cf, r);
  out.g = synthesize(cg, r);
  if (l1_norm(out.f) == 0) fail(Errc::invalid_parameter, "f vanished");
  return out;
}

// Instance for the frontier-avoiding pair bounds: |c(f)| >= alpha on its
// support, |c(g)| <= 1, supp(g) off the frontier of f. `bounded` also
// controls whether the magnitude profile is enforced.
PairInstance gen_disjoint_pair(Rng& rng, int resolution, bool bounded,
                               const std::optional<Rational>& fixed_alpha) {
  PairInstance out;
  const int r = rng.range(2, resolution);
  out.alpha = fixed_alpha ? *fixed_alpha : rng.unit_rational(6);

  HaarExpansion cf;
  for (const auto& i :
       sample_intervals(rng, rng.range(1, 6), 1, r - 1, {})) {
    const Rational extra(rng.range(0, 8), 4);
    const Rational magnitude = bounded ? Rational(out.alpha * (1 + extra))
                                       : Rational(abs(rng.nonzero_rational(8, 8)));
    cf.set(i, (rng.flip() ? 1 : -1) * magnitude);
  }
  out.f = synthesize(cf, r);

  IntervalSet avoid = cf.support();
  const IntervalSet frontier = zero_frontier(out.f);
  avoid.insert(frontier.begin(), frontier.end());
  HaarExpansion cg;
  for (const auto& i :
       sample_intervals(rng, rng.range(0, 6), 1, r - 1, avoid)) {
    const Rational magnitude = bounded
                                   ? rng.unit_rational(8)
                                   : Rational(abs(rng.nonzero_rational(8, 8)));
    cg.set(i, (rng.flip() ? 1 : -1) * magnitude);
  }
  out.g = synthesize(cg, r);

  if (bounded) {
    for (const auto& [i, v] : analyze(out.f)) {
      if (abs(v) < out.alpha) fail(Errc::invalid_parameter, "f below alpha");
    }
    for (const auto& [i, v] : analyze(out.g)) {
      if (abs(v) > 1) fail(Errc::invalid_parameter, "g above 1");
    }
  }
  return out;
}

json pair_witness(const PairInstance& p) {
  json w{{"f", to_json(p.f)}, {"g", to_json(p.g)}};
  if (!p.frontier.empty()) w["family"] = interval_set_witness(p.frontier);
  if (p.alpha != 0) w["alpha"] = to_string(p.alpha);
  if (p.eps != 0) w["epsilon"] = to_string(p.eps);
  return w;
}

// ---- banded instances -----------------------------------------------------------

BandedInstance gen_banded(Rng& rng, int resolution,
                          const std::optional<Rational>& fixed_alpha,
                          const std::optional<Rational>& fixed_b) {
  BandedInstance out;
  const int r = rng.range(2, resolution);
  out.alpha = fixed_alpha ? *fixed_alpha : rng.unit_rational(6);
  out.b = fixed_b ? *fixed_b : Rational(rng.range(1, 8), rng.range(1, 4));
  out.eps = rng.open_unit_rational(8);

  HaarExpansion ch;
  out.s = sample_intervals(rng, rng.range(1, 6), 1, r - 1, {});
  for (const auto& i : out.s) {
    const Rational extra(rng.range(0, 8), 4);
    ch.set(i, (rng.flip() ? 1 : -1) * out.alpha * out.b * (1 + extra));
  }
  for (const auto& i :
       sample_intervals(rng, rng.range(0, 6), 1, r - 1, out.s)) {
    ch.set(i, (rng.flip() ? 1 : -1) * out.b * rng.unit_rational(8));
  }
  out.h = synthesize(ch, r);

  const HaarExpansion vh = analyze(out.h);
  for (const auto& [i, v] : vh) {
    const bool in_s = out.s.count(i) > 0;
    if (in_s && abs(v) < out.alpha * out.b) {
      fail(Errc::invalid_parameter, "band floor violated");
    }
    if (!in_s && abs(v) > out.b) {
      fail(Errc::invalid_parameter, "band ceiling violated");
    }
  }
  return out;
}

json banded_witness(const BandedInstance& b) {
  return json{{"h", to_json(b.h)},
              {"S", interval_set_witness(b.s)},
              {"alpha", to_string(b.alpha)},
              {"b", to_string(b.b)},
              {"epsilon", to_string(b.eps)}};
}

// ---- general instances (banded pipeline inputs) -------------------------------

GeneralInstance gen_general(Rng& rng, int resolution, bool allow_top) {
  GeneralInstance out;
  const int r = rng.range(2, resolution);
  HaarExpansion cf;
  const int count = rng.range(1, 8);
  for (int t = 0; t < count; ++t) {
    DyadicInterval i = allow_top && rng.below(6) == 0
                           ? (rng.flip() ? DyadicInterval::root()
                                         : DyadicInterval(0, 0))
                           : random_interval(rng, 1, r - 1);
    cf.set(i, rng.nonzero_rational(9, 8));
  }
  out.f = synthesize(cf, r);
  const HaarExpansion vf = analyze(out.f);

  std::vector<Rational> magnitudes;
  for (const auto& [i, v] : vf) magnitudes.push_back(abs(v));
  std::sort(magnitudes.begin(), magnitudes.end());
  const Rational pick = magnitudes[rng.below(magnitudes.size())];
  switch (rng.below(3)) {
    case 0: out.delta = pick; break;  // some member sits exactly on the floor
    case 1: out.delta = pick / 2; break;
    default: out.delta = pick * rng.unit_rational(6); break;
  }
  out.rho = rng.flip() ? pick / 2 : Rational(rng.range(1, 8), rng.range(1, 8));
  out.eps = rng.open_unit_rational(8);

  for (const auto& [i, v] : vf) {
    if (abs(v) >= out.delta && rng.flip()) out.a.insert(i);
  }
  if (!allow_top) {
    // The single-band run tolerates selection members carrying no
    // coefficient at all; the pipeline's floor precondition does not.
    for (const auto& i :
         sample_intervals(rng, rng.range(0, 2), 1, r - 1, vf.support())) {
      out.a.insert(i);
    }
  }
  return out;
}

json general_witness(const GeneralInstance& g) {
  return json{{"f", to_json(g.f)},
              {"A", interval_set_witness(g.a)},
              {"delta", to_string(g.delta)},
              {"rho", to_string(g.rho)},
              {"epsilon", to_string(g.eps)}};
}

// ---- the trial loop -------------------------------------------------------------

struct TrialOutcome {
  Rational lhs;  // statement normalized to lhs <= rhs
  Rational rhs;
  bool ok = true;
  json witness;
};

using TrialFn = std::function<TrialOutcome(Rng&, int)>;

CheckReport run_trials(const std::string& statement, long trials,
                       std::uint64_t seed, int resolution, const TrialFn& fn) {
  CheckReport report;
  report.statement = statement;
  report.seed = seed;
  report.resolution = resolution;
  const auto start = std::chrono::steady_clock::now();
  for (long t = 0; t < trials; ++t) {
    Rng rng = Rng(seed).fork(static_cast<std::uint64_t>(t) + 1);
    TrialOutcome o = fn(rng, resolution);
    ++report.trials;
    const bool violated = !o.ok || o.lhs > o.rhs;
    if (o.rhs > 0) {
      const Rational ratio = o.lhs / o.rhs;
      if (!report.worst_ratio_defined || ratio > report.worst_ratio) {
        report.worst_ratio = ratio;
        report.worst_ratio_defined = true;
        report.witness = o.witness.dump();
      }
    }
    if (violated) {
      ++report.violations;
      if (report.witness.empty()) report.witness = o.witness.dump();
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

// ---- per-statement evaluators ---------------------------------------------------

TrialOutcome eval_chain(Rng& rng, int resolution, bool direct) {
  const ChainInstance c = gen_chain(rng, resolution, direct);
  TrialOutcome o;
  const Rational ci = abs(coefficient(c.f, c.i));
  const Rational cj = abs(coefficient(c.f, c.j));
  o.lhs = abs(ci - cj) / (direct ? 2 : 4);
  o.rhs = norm_on_diff(c.f, c.i, c.k);
  o.ok = o.lhs <= o.rhs;
  o.witness = chain_witness(c);
  return o;
}

TrialOutcome eval_set_partition(Rng& rng, int resolution) {
  const SetInstance s = gen_interval_set(rng, resolution);
  const SuccessorPartition p = successor_partition(s.family);
  TrialOutcome o;
  o.lhs = Rational(p.multi_max.size() + 1);
  o.rhs = Rational(p.minimal.size());
  o.ok = p.multi_max.size() < p.minimal.size();
  o.witness = json{{"family", interval_set_witness(s.family)}};
  return o;
}

TrialOutcome eval_frontier_bound(Rng& rng, int resolution) {
  const PairInstance p = gen_frontier_pair(rng, resolution);
  TrialOutcome o;
  o.lhs = p.alpha * p.eps / 6 * Rational(p.frontier.size());
  o.rhs = l1_norm(p.f + p.g);
  o.ok = o.lhs <= o.rhs;
  o.witness = pair_witness(p);
  return o;
}

TrialOutcome eval_pair_step(Rng& rng, int resolution) {
  const PairInstance p = gen_pivot_pair(rng, resolution);
  TrialOutcome o;
  o.witness = pair_witness(p);
  o.witness["pivot"] = p.pivot.str();
  try {
    const PairStepResult step = symmetrize_pair_step(p.f, p.g, p.pivot);
    const HaarExpansion cf = analyze(step.f);
    const HaarExpansion cg = analyze(step.g);
    bool aux = !cf.contains(p.pivot) && !cg.contains(p.pivot);
    for (const auto& [i, v] : cf) {
      if (cg.contains(i)) aux = false;
    }
    std::set<Rational> vf, vg;
    for (const auto& [i, v] : analyze(p.f)) vf.insert(v);
    for (const auto& [i, v] : analyze(p.g)) vg.insert(v);
    for (const auto& [i, v] : cf) {
      if (vf.count(v) == 0) aux = false;
    }
    for (const auto& [i, v] : cg) {
      if (vg.count(v) == 0) aux = false;
    }
    const Rational after = l1_norm(step.f + step.g);
    aux = aux && after > 0;
    o.lhs = l1_norm(p.f) * after;
    o.rhs = l1_norm(step.f) * l1_norm(p.f + p.g);
    o.ok = aux && o.lhs <= o.rhs;
  } catch (const Error&) {
    o.ok = false;
    o.lhs = 1;
    o.rhs = 0;
  }
  return o;
}

TrialOutcome eval_disjoint_bound(Rng& rng, int resolution,
                                 const std::optional<Rational>& alpha) {
  const PairInstance p = gen_disjoint_pair(rng, resolution, true, alpha);
  TrialOutcome o;
  o.lhs = l1_norm(p.f);
  o.rhs = (Rational(5) / p.alpha + 1) * l1_norm(p.f + p.g);
  o.ok = o.lhs <= o.rhs;
  o.witness = pair_witness(p);
  return o;
}

bool recheck_symmetrized(const PairInstance& p, const SymmetrizedPair& out) {
  const HaarExpansion cf = analyze(out.f_tilde);
  const HaarExpansion cg = analyze(out.g_tilde);
  if (cf.at(DyadicInterval::root()) != 0 || cg.at(DyadicInterval::root()) != 0)
    return false;
  if (cf.at(DyadicInterval(0, 0)) != 0 || cg.at(DyadicInterval(0, 0)) != 0)
    return false;
  for (const auto& [i, v] : cf) {
    if (cg.contains(i)) return false;
  }
  for (const auto& i : zero_frontier(out.f_tilde)) {
    if (cg.at(i) != 0) return false;
    if (!symmetric_on(out.f_tilde, i) || !symmetric_on(out.g_tilde, i))
      return false;
  }
  std::set<Rational> vf, vg;
  for (const auto& [i, v] : analyze(p.f)) vf.insert(v);
  for (const auto& [i, v] : analyze(p.g)) vg.insert(v);
  for (const auto& [i, v] : cf) {
    if (vf.count(v) == 0) return false;
  }
  for (const auto& [i, v] : cg) {
    if (vg.count(v) == 0) return false;
  }
  return l1_norm(out.f_tilde + out.g_tilde) > 0;
}

TrialOutcome eval_full_symmetrize(Rng& rng, int resolution) {
  const PairInstance p = gen_disjoint_pair(rng, resolution, false, std::nullopt);
  TrialOutcome o;
  o.witness = pair_witness(p);
  try {
    const SymmetrizedPair out = full_symmetrize(p.f, p.g);
    o.lhs = l1_norm(p.f) * l1_norm(out.f_tilde + out.g_tilde);
    o.rhs = l1_norm(out.f_tilde) * l1_norm(p.f + p.g);
    o.ok = recheck_symmetrized(p, out) && o.lhs <= o.rhs;
  } catch (const Error&) {
    o.ok = false;
    o.lhs = 1;
    o.rhs = 0;
  }
  return o;
}

TrialOutcome eval_banded_bound(Rng& rng, int resolution,
                               const GenParams& params) {
  const BandedInstance b =
      gen_banded(rng, resolution, params.alpha, params.band_scale);
  TrialOutcome o;
  const IntervalSet enlarged = epsilon_enlargement(b.h, b.s, b.eps);
  o.lhs = l1_norm(project(b.h, enlarged));
  o.rhs = Rational(42) / (b.alpha * b.alpha * b.eps) * l1_norm(b.h);
  o.ok = o.lhs <= o.rhs;
  o.witness = banded_witness(b);
  return o;
}

TrialOutcome eval_band_enlarge(Rng& rng, int resolution) {
  const GeneralInstance g = gen_general(rng, resolution, false);
  TrialOutcome o;
  o.witness = general_witness(g);
  const EnlargeResult run = band_enlarge(g.f, g.a, g.rho, g.eps);
  IntervalSet band;
  for (const auto& i : g.a) {
    const Rational v = abs(coefficient(g.f, i));
    if (g.rho < v && v <= 2 * g.rho) band.insert(i);
  }
  bool aux = std::includes(run.selected.begin(), run.selected.end(),
                           band.begin(), band.end());
  if (!band.empty()) {
    const IntervalSet reference = brute_epsilon_enlargement(g.f, band, g.eps);
    aux = aux && std::includes(reference.begin(), reference.end(),
                               run.selected.begin(), run.selected.end());
  } else {
    aux = aux && run.selected.empty();
  }
  aux = aux && run.certificate.satisfied &&
        run.certificate.lhs == l1_norm(project(g.f, run.selected));
  o.lhs = run.certificate.lhs;
  o.rhs = run.certificate.constant * run.certificate.rhs_norm;
  o.ok = aux && o.lhs <= o.rhs;
  return o;
}

TrialOutcome eval_pipeline(Rng& rng, int resolution) {
  const GeneralInstance g = gen_general(rng, resolution, true);
  TrialOutcome o;
  o.witness = general_witness(g);
  const EnlargeResult run = construct_enlargement(g.f, g.a, g.delta, g.eps);
  bool aux = std::includes(run.selected.begin(), run.selected.end(),
                           g.a.begin(), g.a.end());
  if (!g.a.empty()) {
    const IntervalSet reference = brute_epsilon_enlargement(g.f, g.a, g.eps);
    aux = aux && std::includes(reference.begin(), reference.end(),
                               run.selected.begin(), run.selected.end());
  } else {
    aux = aux && run.selected.empty();
  }
  aux = aux && run.certificate.satisfied &&
        run.certificate.lhs == l1_norm(project(g.f, run.selected));
  o.lhs = run.certificate.lhs;
  o.rhs = run.certificate.constant * run.certificate.rhs_norm;
  o.ok = aux && o.lhs <= o.rhs;
  return o;
}

}  // namespace

IntervalSet brute_epsilon_enlargement(const StepFunction& f,
                                      const IntervalSet& a,
                                      const Rational& eps) {
  const HaarExpansion coeffs = analyze(f);
  const auto admits = [&](const DyadicInterval& candidate) {
    for (const auto& i : a) {
      if (!subset_eq(i, candidate)) continue;
      const Rational base = coeffs.at(i);
      bool chain_ok = true;
      DyadicInterval k = i;
      while (true) {
        if (abs(coeffs.at(k) - base) >= eps * abs(base)) {
          chain_ok = false;
          break;
        }
        if (k == candidate) break;
        k = *parent(k);
      }
      if (chain_ok) return true;
    }
    return false;
  };

  IntervalSet out;
  if (admits(DyadicInterval::root())) out.insert(DyadicInterval::root());
  for (int level = 0; level < f.resolution(); ++level) {
    for (std::uint64_t index = 0; index < (std::uint64_t(1) << level); ++index) {
      const DyadicInterval j(level, index);
      if (admits(j)) out.insert(j);
    }
  }
  return out;
}

InstanceKind instance_kind_from_name(const std::string& name) {
  if (name == "chain") return InstanceKind::chain;
  if (name == "disjoint-pair") return InstanceKind::disjoint_pair;
  if (name == "banded") return InstanceKind::banded;
  if (name == "general") return InstanceKind::general;
  if (name == "interval-set") return InstanceKind::interval_set;
  fail(Errc::invalid_parameter, "unknown instance kind '" + name + "'");
}

Instance gen_instance(InstanceKind kind, std::uint64_t seed, int resolution,
                      const GenParams& params) {
  Rng rng = Rng(seed).fork(1);
  switch (kind) {
    case InstanceKind::chain: {
      const bool direct = rng.flip();
      return gen_chain(rng, resolution, direct);
    }
    case InstanceKind::disjoint_pair:
      return gen_frontier_pair(rng, resolution);
    case InstanceKind::banded:
      return gen_banded(rng, resolution, params.alpha, params.band_scale);
    case InstanceKind::general:
      return gen_general(rng, resolution, true);
    case InstanceKind::interval_set:
      return gen_interval_set(rng, resolution);
  }
  fail(Errc::invalid_parameter, "unknown instance kind");
}

const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids{
      "lemma-3.1", "lemma-3.2", "lemma-3.3", "prop-3.3a",
      "lemma-3.4", "lemma-3.5", "full-symmetrization",
      "thm-3.8",   "cor-3.9",   "thm-2.2"};
  return ids;
}

CheckReport check(const std::string& statement, long trials,
                  std::uint64_t seed, int resolution,
                  const GenParams& params) {
  if (trials < 0) fail(Errc::invalid_parameter, "negative trial count");
  if (params.alpha && (*params.alpha <= 0 || *params.alpha > 1)) {
    fail(Errc::invalid_parameter, "alpha must lie in (0,1]");
  }
  if (params.band_scale && *params.band_scale <= 0) {
    fail(Errc::invalid_parameter, "band scale must be positive");
  }
  if (resolution < 2 || resolution > max_level()) {
    fail(Errc::invalid_parameter, "resolution must lie in [2, " +
                                      std::to_string(max_level()) + "]");
  }
  TrialFn fn;
  if (statement == "lemma-3.1") {
    fn = [](Rng& r, int n) { return eval_chain(r, n, true); };
  } else if (statement == "lemma-3.2") {
    fn = [](Rng& r, int n) { return eval_chain(r, n, false); };
  } else if (statement == "lemma-3.3") {
    fn = eval_frontier_bound;
  } else if (statement == "prop-3.3a") {
    fn = eval_set_partition;
  } else if (statement == "lemma-3.4") {
    fn = eval_pair_step;
  } else if (statement == "lemma-3.5") {
    fn = [alpha = params.alpha](Rng& r, int n) {
      return eval_disjoint_bound(r, n, alpha);
    };
  } else if (statement == "full-symmetrization") {
    fn = eval_full_symmetrize;
  } else if (statement == "thm-3.8") {
    fn = [params](Rng& r, int n) { return eval_banded_bound(r, n, params); };
  } else if (statement == "cor-3.9") {
    fn = eval_band_enlarge;
  } else if (statement == "thm-2.2") {
    fn = eval_pipeline;
  } else {
    std::string known;
    for (const auto& id : statement_ids()) {
      known += (known.empty() ? "" : ", ") + id;
    }
    fail(Errc::unknown_statement,
         "no checker for '" + statement + "'; known: " + known);
  }
  return run_trials(statement, trials, seed, resolution, fn);
}

ExampleResult left_branch_example(int n) {
  if (n < 1) fail(Errc::invalid_parameter, "n must be positive");
  if (2 * n > max_level()) {
    fail(Errc::resolution_overflow,
         "needs resolution " + std::to_string(2 * n) + " > maximum level " +
             std::to_string(max_level()));
  }
  HaarExpansion coeffs;
  coeffs.set(DyadicInterval::root(), Rational(1));
  for (int level = 0; level < 2 * n; ++level) {
    coeffs.set(DyadicInterval(level, 0), Rational(1));
  }
  ExampleResult out;
  out.f = synthesize(coeffs, 2 * n);
  out.a.insert(DyadicInterval::root());
  for (int k = 1; k <= n; ++k) out.a.insert(DyadicInterval(2 * k - 1, 0));
  out.f_norm = l1_norm(out.f);
  out.projection_norm = l1_norm(project(out.f, out.a));
  return out;
}

ExampleResult distributed_example(int n) {
  if (n < 1) fail(Errc::invalid_parameter, "n must be positive");
  if (4 * n > max_level()) {
    fail(Errc::resolution_overflow,
         "needs resolution " + std::to_string(4 * n) + " > maximum level " +
             std::to_string(max_level()));
  }
  HaarExpansion coeffs;
  coeffs.set(DyadicInterval::root(), Rational(1));
  ExampleResult out;
  out.a.insert(DyadicInterval::root());

  // The positive set after step k-1 is a union of equal dyadic intervals at
  // level 2(k-1); step k puts one coefficient pair on the halves of each
  // component, which keeps the partial sums collapsing onto the new
  // positive set.
  std::vector<std::uint64_t> components{0};
  for (int k = 1; k <= 2 * n; ++k) {
    const int level = 2 * k - 1;
    const Rational value = pow2(-k);
    std::vector<std::uint64_t> next;
    next.reserve(components.size() * 2);
    for (const std::uint64_t c : components) {
      coeffs.set(DyadicInterval(level, 2 * c), value);
      coeffs.set(DyadicInterval(level, 2 * c + 1), value);
      if (k % 2 == 0) {
        out.a.insert(DyadicInterval(level, 2 * c));
        out.a.insert(DyadicInterval(level, 2 * c + 1));
      }
      next.push_back(4 * c);
      next.push_back(4 * c + 2);
    }
    components = std::move(next);
  }
  out.f = synthesize(coeffs, 4 * n);
  out.f_norm = l1_norm(out.f);
  out.projection_norm = l1_norm(project(out.f, out.a));

  if (out.f_norm != 1) {
    fail(Errc::verification_failed, "norm of the distributed family is " +
                                        to_string(out.f_norm) + ", not 1");
  }
  for (const Rational& eps :
       {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(99, 100)}) {
    if (epsilon_enlargement(out.f, out.a, eps) != out.a) {
      fail(Errc::verification_failed,
           "enlargement grew at tolerance " + to_string(eps));
    }
  }
  return out;
}

}  // namespace haarlab
