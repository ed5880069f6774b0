#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "haarlab/rational.hpp"

namespace haarlab {

// A node of the dyadic tree over [0,1): (level, index) denotes
// [index*2^-level, (index+1)*2^-level). The distinguished root denotes
// [0,2], whose only child in the tree is [0,1) = (0,0); everything the
// library evaluates vanishes on [1,2], so the root only plays its ordering
// role (measure(root) is never needed).
class DyadicInterval {
 public:
  static DyadicInterval root() { return DyadicInterval(); }

  // Validates 0 <= level <= kHardMaxLevel and index < 2^level.
  DyadicInterval(int level, std::uint64_t index);

  bool is_root() const { return level_ < 0; }
  int level() const;             // throws on root
  std::uint64_t index() const;   // throws on root

  Rational measure() const;        // 2^-level; throws on root
  Rational left_endpoint() const;  // index * 2^-level; throws on root

  // "root" or "level/index", e.g. "3/5".
  std::string str() const;
  static DyadicInterval parse(const std::string& text);

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
  // Canonical order: root first, then by (level, index) ascending.
  friend std::strong_ordering operator<=>(const DyadicInterval& a,
                                          const DyadicInterval& b) {
    if (a.level_ != b.level_) return a.level_ <=> b.level_;
    return a.index_ <=> b.index_;
  }

 private:
  DyadicInterval() : level_(-1), index_(0) {}
  int level_;
  std::uint64_t index_;
};

enum class Relation { equal, strict_subset, strict_superset, disjoint };

// Containment order of the underlying half-open intervals; the root is a
// strict superset of everything else.
Relation relation(const DyadicInterval& a, const DyadicInterval& b);

bool subset_eq(const DyadicInterval& a, const DyadicInterval& b);  // a <= b
bool strict_subset(const DyadicInterval& a, const DyadicInterval& b);
bool disjoint(const DyadicInterval& a, const DyadicInterval& b);

// Parent in the tree ((n,k) -> (n-1,k/2), (0,0) -> root, root -> none).
std::optional<DyadicInterval> parent(const DyadicInterval& i);

struct Halves {
  DyadicInterval left;
  std::optional<DyadicInterval> right;  // absent for the root (see halves())
};

// Left/right half subintervals. For the root the conceptual right half
// [1,2) carries nothing, so halves(root) = ((0,0), absent). Splitting past
// max_lvl throws Errc::resolution_overflow.
Halves halves(const DyadicInterval& i, int max_lvl);
Halves halves(const DyadicInterval& i);

// The chain {K : from <= K <= to}, ordered by increasing measure, endpoints
// included. Throws Errc::not_comparable unless from <= to.
std::vector<DyadicInterval> segment(const DyadicInterval& from,
                                    const DyadicInterval& to);

// Finite set of intervals; std::set over the canonical order keeps every
// iteration deterministic.
using IntervalSet = std::set<DyadicInterval>;

// Removes exactly the minimal elements (those with no strict subset in s).
IntervalSet derived_set(const IntervalSet& s);

// Number of derived-set iterations until empty, minus one. Throws
// Errc::empty_set on the empty set.
int set_order(const IntervalSet& s);

// The unique m with i in S^(m) \ S^(m+1). Throws Errc::not_a_member if
// i is not in s.
int order_in_set(const DyadicInterval& i, const IntervalSet& s);

// Partition by the successor structure inside the set: `minimal` has no
// strict subset in the set, `single_max` has exactly one maximal strict
// subset, `multi_max` has at least two. For every finite nonempty set,
// |multi_max| < |minimal|.
struct SuccessorPartition {
  IntervalSet minimal;
  IntervalSet single_max;
  IntervalSet multi_max;
};

SuccessorPartition successor_partition(const IntervalSet& s);

}  // namespace haarlab
