#include "haarlab/dyadic.hpp"

#include <algorithm>
#include <map>

#include "haarlab/config.hpp"
#include "haarlab/error.hpp"

namespace haarlab {

DyadicInterval::DyadicInterval(int level, std::uint64_t index)
    : level_(level), index_(index) {
  if (level < 0 || level > kHardMaxLevel) {
    fail(Errc::resolution_overflow,
         "level " + std::to_string(level) + " outside [0, " +
             std::to_string(kHardMaxLevel) + "]");
  }
  if (index >= (std::uint64_t(1) << level)) {
    fail(Errc::invalid_parameter,
         "index " + std::to_string(index) + " out of range at level " +
             std::to_string(level));
  }
}

int DyadicInterval::level() const {
  if (is_root()) fail(Errc::root_interval, "root has no level");
  return level_;
}

std::uint64_t DyadicInterval::index() const {
  if (is_root()) fail(Errc::root_interval, "root has no index");
  return index_;
}

Rational DyadicInterval::measure() const {
  if (is_root()) fail(Errc::root_interval, "measure of the root is unused");
  return pow2(-level_);
}

Rational DyadicInterval::left_endpoint() const {
  if (is_root()) fail(Errc::root_interval, "root has no endpoint in [0,1)");
  return Rational(BigInt(index_)) * pow2(-level_);
}

std::string DyadicInterval::str() const {
  if (is_root()) return "root";
  return std::to_string(level_) + "/" + std::to_string(index_);
}

DyadicInterval DyadicInterval::parse(const std::string& text) {
  if (text == "root") return root();
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size()) {
    fail(Errc::schema, "invalid interval text: '" + text + "'");
  }
  const std::string lv = text.substr(0, slash);
  const std::string ix = text.substr(slash + 1);
  if (lv.find_first_not_of("0123456789") != std::string::npos ||
      ix.find_first_not_of("0123456789") != std::string::npos) {
    fail(Errc::schema, "invalid interval text: '" + text + "'");
  }
  int level = 0;
  std::uint64_t index = 0;
  try {
    level = std::stoi(lv);
    index = std::stoull(ix);
  } catch (...) {
    fail(Errc::schema, "invalid interval text: '" + text + "'");
  }
  if (level > kHardMaxLevel || index >= (std::uint64_t(1) << std::min(level, 63))) {
    fail(Errc::schema, "interval out of range: '" + text + "'");
  }
  return DyadicInterval(level, index);
}

Relation relation(const DyadicInterval& a, const DyadicInterval& b) {
  if (a == b) return Relation::equal;
  if (a.is_root()) return Relation::strict_superset;
  if (b.is_root()) return Relation::strict_subset;
  if (a.level() > b.level()) {
    return (a.index() >> (a.level() - b.level())) == b.index()
               ? Relation::strict_subset
               : Relation::disjoint;
  }
  if (b.level() > a.level()) {
    return (b.index() >> (b.level() - a.level())) == a.index()
               ? Relation::strict_superset
               : Relation::disjoint;
  }
  return Relation::disjoint;
}

bool subset_eq(const DyadicInterval& a, const DyadicInterval& b) {
  const Relation r = relation(a, b);
  return r == Relation::equal || r == Relation::strict_subset;
}

bool strict_subset(const DyadicInterval& a, const DyadicInterval& b) {
  return relation(a, b) == Relation::strict_subset;
}

bool disjoint(const DyadicInterval& a, const DyadicInterval& b) {
  return relation(a, b) == Relation::disjoint;
}

std::optional<DyadicInterval> parent(const DyadicInterval& i) {
  if (i.is_root()) return std::nullopt;
  if (i.level() == 0) return DyadicInterval::root();
  return DyadicInterval(i.level() - 1, i.index() >> 1);
}

Halves halves(const DyadicInterval& i, int max_lvl) {
  if (i.is_root()) return {DyadicInterval(0, 0), std::nullopt};
  if (i.level() + 1 > max_lvl) {
    fail(Errc::resolution_overflow,
         "splitting " + i.str() + " exceeds maximum level " +
             std::to_string(max_lvl));
  }
  return {DyadicInterval(i.level() + 1, 2 * i.index()),
          DyadicInterval(i.level() + 1, 2 * i.index() + 1)};
}

Halves halves(const DyadicInterval& i) { return halves(i, max_level()); }

std::vector<DyadicInterval> segment(const DyadicInterval& from,
                                    const DyadicInterval& to) {
  if (!subset_eq(from, to)) {
    fail(Errc::not_comparable, from.str() + " is not contained in " + to.str());
  }
  std::vector<DyadicInterval> chain;
  DyadicInterval k = from;
  while (true) {
    chain.push_back(k);
    if (k == to) break;
    k = *parent(k);
  }
  return chain;
}

IntervalSet derived_set(const IntervalSet& s) {
  IntervalSet out;
  for (const auto& i : s) {
    const bool minimal = std::none_of(s.begin(), s.end(), [&](const auto& j) {
      return strict_subset(j, i);
    });
    if (!minimal) out.insert(i);
  }
  return out;
}

int set_order(const IntervalSet& s) {
  if (s.empty()) fail(Errc::empty_set, "order of the empty set");
  int iterations = 0;
  IntervalSet cur = s;
  while (!cur.empty()) {
    cur = derived_set(cur);
    ++iterations;
  }
  return iterations - 1;
}

int order_in_set(const DyadicInterval& i, const IntervalSet& s) {
  if (s.count(i) == 0) {
    fail(Errc::not_a_member, i.str() + " is not in the set");
  }
  int m = 0;
  IntervalSet cur = s;
  while (true) {
    const IntervalSet next = derived_set(cur);
    if (next.count(i) == 0) return m;
    cur = next;
    ++m;
  }
}

SuccessorPartition successor_partition(const IntervalSet& s) {
  SuccessorPartition out;
  for (const auto& i : s) {
    std::vector<DyadicInterval> below;
    for (const auto& j : s) {
      if (strict_subset(j, i)) below.push_back(j);
    }
    if (below.empty()) {
      out.minimal.insert(i);
      continue;
    }
    int maximal = 0;
    for (const auto& j : below) {
      const bool is_max =
          std::none_of(below.begin(), below.end(),
                       [&](const auto& k) { return strict_subset(j, k); });
      if (is_max && ++maximal >= 2) break;
    }
    if (maximal == 1) {
      out.single_max.insert(i);
    } else {
      out.multi_max.insert(i);
    }
  }
  return out;
}

}  // namespace haarlab
