#include "haarlab/symmetrization.hpp"

#include <algorithm>
#include <set>

#include "haarlab/config.hpp"
#include "haarlab/error.hpp"

namespace haarlab {

const char* branch_name(Branch b) {
  return b == Branch::left ? "left" : "right";
}

Rational norm_imbalance(const StepFunction& f, const DyadicInterval& i) {
  if (i.is_root()) fail(Errc::root_interval, "imbalance needs both halves");
  const Halves h = halves(i, kHardMaxLevel);
  return norm_on(f, h.left) - norm_on(f, *h.right);
}

namespace {

StepFunction copy_half(const StepFunction& f, const DyadicInterval& i,
                       Branch source, Mode mode) {
  if (i.is_root()) fail(Errc::root_interval, "cannot symmetrize on the root");
  if (mode == Mode::strict && coefficient(f, i) != 0) {
    fail(Errc::zero_coefficient,
         "c(" + i.str() + ") = " + to_string(coefficient(f, i)) +
             " != 0; the coefficient rewrite needs a vanishing coefficient");
  }
  const int n = f.resolution();
  if (i.level() >= n) return f;  // constant on i, both branches are no-ops

  const std::size_t base = i.index() << (n - i.level());
  const std::size_t half = std::size_t(1) << (n - i.level() - 1);
  std::vector<Rational> vals = f.values();
  if (source == Branch::left) {
    for (std::size_t k = 0; k < half; ++k) vals[base + half + k] = vals[base + k];
  } else {
    for (std::size_t k = 0; k < half; ++k) vals[base + k] = vals[base + half + k];
  }
  return StepFunction(n, std::move(vals));
}

}  // namespace

StepFunction symmetrize_left(const StepFunction& f, const DyadicInterval& i,
                             Mode mode) {
  return copy_half(f, i, Branch::left, mode);
}

StepFunction symmetrize_right(const StepFunction& f, const DyadicInterval& i,
                              Mode mode) {
  return copy_half(f, i, Branch::right, mode);
}

bool symmetric_on(const StepFunction& f, const DyadicInterval& i) {
  if (i.is_root()) fail(Errc::root_interval, "symmetry needs both halves");
  const int n = f.resolution();
  if (i.level() >= n) return true;
  const std::size_t base = i.index() << (n - i.level());
  const std::size_t half = std::size_t(1) << (n - i.level() - 1);
  for (std::size_t k = 0; k < half; ++k) {
    if (f.values()[base + k] != f.values()[base + half + k]) return false;
  }
  return true;
}

namespace {

bool supports_disjoint(const HaarExpansion& a, const HaarExpansion& b) {
  for (const auto& [i, v] : a) {
    if (b.contains(i)) return false;
  }
  return true;
}

void check_pair_preconditions(const StepFunction& f, const StepFunction& g,
                              const DyadicInterval& i, Mode mode) {
  if (mode != Mode::strict) return;
  if (i.is_root()) fail(Errc::root_interval, "cannot symmetrize on the root");
  const HaarExpansion cf = analyze(f);
  const HaarExpansion cg = analyze(g);
  if (cf.at(i) != 0 || cg.at(i) != 0) {
    fail(Errc::precondition, "nonzero coefficient at the pivot " + i.str());
  }
  if (cf.contains(DyadicInterval::root()) ||
      cg.contains(DyadicInterval::root())) {
    fail(Errc::precondition, "supports must avoid the root");
  }
  if (!supports_disjoint(cf, cg)) {
    fail(Errc::precondition, "Haar supports are not disjoint");
  }
  if (l1_norm(f) == 0) fail(Errc::precondition, "||f|| must be positive");
}

}  // namespace

PairStepResult symmetrize_pair_step(const StepFunction& f,
                                    const StepFunction& g,
                                    const DyadicInterval& i, Mode mode) {
  check_pair_preconditions(f, g, i, mode);

  const StepFunction sum = f + g;
  const Rational total = l1_norm(sum);
  const Halves h = halves(i, kHardMaxLevel);

  Branch branch;
  if (total - norm_on(sum, h.left) == 0) {
    // Everything lives on the left half: copying it keeps the pair alive.
    branch = Branch::left;
  } else if (total - norm_on(sum, *h.right) == 0) {
    branch = Branch::right;
  } else {
    branch = norm_imbalance(f, i) * total >= norm_imbalance(sum, i) * l1_norm(f)
                 ? Branch::left
                 : Branch::right;
  }

  StepFunction f2 = branch == Branch::left ? symmetrize_left(f, i, mode)
                                           : symmetrize_right(f, i, mode);
  StepFunction g2 = branch == Branch::left ? symmetrize_left(g, i, mode)
                                           : symmetrize_right(g, i, mode);
  return {std::move(f2), std::move(g2), branch};
}

IntervalSet zero_frontier(const StepFunction& f) {
  const HaarExpansion coeffs = analyze(f);
  IntervalSet frontier;
  for (const auto& [i, v] : coeffs) {
    if (i.is_root()) continue;
    const auto p = parent(i);
    if (!p || p->is_root()) continue;
    if (coeffs.at(*p) == 0) frontier.insert(*p);
  }
  return frontier;
}

namespace {

std::set<Rational> coefficient_values(const HaarExpansion& e) {
  std::set<Rational> out;
  for (const auto& [i, v] : e) out.insert(v);
  return out;
}

void verify_symmetrized(const StepFunction& f0, const StepFunction& g0,
                        const SymmetrizedPair& out) {
  const HaarExpansion cf = analyze(out.f_tilde);
  const HaarExpansion cg = analyze(out.g_tilde);
  const DyadicInterval top(0, 0);
  if (cf.at(DyadicInterval::root()) != 0 || cg.at(DyadicInterval::root()) != 0 ||
      cf.at(top) != 0 || cg.at(top) != 0) {
    fail(Errc::verification_failed, "top coefficients did not stay zero");
  }
  for (const auto& i : zero_frontier(out.f_tilde)) {
    if (cg.at(i) != 0) {
      fail(Errc::verification_failed,
           "c(g~) != 0 on frontier interval " + i.str());
    }
    if (!symmetric_on(out.f_tilde, i) || !symmetric_on(out.g_tilde, i)) {
      fail(Errc::verification_failed,
           "output is not symmetric on frontier interval " + i.str());
    }
  }
  if (!supports_disjoint(cf, cg)) {
    fail(Errc::verification_failed, "supports overlap after symmetrization");
  }
  const std::set<Rational> vf = coefficient_values(analyze(f0));
  for (const auto& [i, v] : cf) {
    if (vf.count(v) == 0) {
      fail(Errc::verification_failed, "new coefficient value in f~");
    }
  }
  const std::set<Rational> vg = coefficient_values(analyze(g0));
  for (const auto& [i, v] : cg) {
    if (vg.count(v) == 0) {
      fail(Errc::verification_failed, "new coefficient value in g~");
    }
  }
  if (l1_norm(f0) > 0) {
    const Rational sum_after = l1_norm(out.f_tilde + out.g_tilde);
    if (sum_after == 0) {
      fail(Errc::verification_failed, "||f~ + g~|| vanished");
    }
    if (l1_norm(f0) * sum_after > l1_norm(out.f_tilde) * l1_norm(f0 + g0)) {
      fail(Errc::verification_failed, "norm ratio decreased");
    }
  }
}

}  // namespace

SymmetrizedPair full_symmetrize(const StepFunction& f, const StepFunction& g,
                                Mode mode) {
  if (mode == Mode::strict) {
    const HaarExpansion cf = analyze(f);
    const HaarExpansion cg = analyze(g);
    const DyadicInterval top(0, 0);
    if (l1_norm(f) == 0) fail(Errc::precondition, "||f|| must be positive");
    if (cf.contains(DyadicInterval::root()) ||
        cg.contains(DyadicInterval::root()) || cf.contains(top) ||
        cg.contains(top)) {
      fail(Errc::precondition, "supports must avoid the root and [0,1)");
    }
    if (!supports_disjoint(cf, cg)) {
      fail(Errc::precondition, "Haar supports are not disjoint");
    }
    for (const auto& i : zero_frontier(f)) {
      if (cg.contains(i)) {
        fail(Errc::precondition,
             "supp(g) meets the frontier of f at " + i.str());
      }
    }
  }

  // Measure ascending = level descending; equal-measure intervals are
  // disjoint, ties broken by index for determinism.
  const IntervalSet frontier_of_f = zero_frontier(f);
  std::vector<DyadicInterval> order(frontier_of_f.begin(),
                                    frontier_of_f.end());
  std::sort(order.begin(), order.end(),
            [](const DyadicInterval& a, const DyadicInterval& b) {
              if (a.level() != b.level()) return a.level() > b.level();
              return a.index() < b.index();
            });

  SymmetrizedPair out{f, g, {}};
  for (const auto& i : order) {
    PairStepResult step =
        symmetrize_pair_step(out.f_tilde, out.g_tilde, i, mode);
    out.f_tilde = std::move(step.f);
    out.g_tilde = std::move(step.g);
    out.trace.emplace_back(i, step.branch);
  }
  verify_symmetrized(f, g, out);
  return out;
}

}  // namespace haarlab
