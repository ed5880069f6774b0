#include "haarlab/rng.hpp"

namespace haarlab {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return next() % n; }

int Rng::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rng Rng::fork(std::uint64_t label) const {
  Rng derived(state_ ^ (label * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
  derived.next();
  return derived;
}

Rational Rng::nonzero_rational(int max_num, int max_den) {
  const int num = range(1, max_num) * (flip() ? 1 : -1);
  const int den = range(1, max_den);
  return Rational(num, den);
}

Rational Rng::unit_rational(int max_den) {
  const int den = range(1, max_den);
  const int num = range(1, den);
  return Rational(num, den);
}

Rational Rng::open_unit_rational(int max_den) {
  const int den = range(2, max_den < 2 ? 2 : max_den);
  const int num = range(1, den - 1);
  return Rational(num, den);
}

}  // namespace haarlab
