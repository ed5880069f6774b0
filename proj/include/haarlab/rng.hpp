#pragma once

#include <cstdint>

#include "haarlab/rational.hpp"

namespace haarlab {

// Deterministic splitmix64 stream. Standard-library distributions are
// implementation-defined, so everything is derived from raw 64-bit draws to
// keep reports reproducible bit-for-bit across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform in [0, n); n > 0. Modulo bias is irrelevant at test sizes.
  std::uint64_t below(std::uint64_t n);

  // Uniform integer in [lo, hi], inclusive.
  int range(int lo, int hi);

  bool flip() { return (next() & 1) != 0; }

  // Independent substream; forking with distinct labels never collides in
  // practice (splitmix64 is a bijection over the state space).
  Rng fork(std::uint64_t label) const;

  // Uniform nonzero rational with |numerator| <= max_num and denominator a
  // uniform choice in [1, max_den].
  Rational nonzero_rational(int max_num, int max_den);

  // Uniform rational in (0, 1]: k/d with 1 <= k <= d <= max_den.
  Rational unit_rational(int max_den);

  // Uniform rational strictly inside (0, 1).
  Rational open_unit_rational(int max_den);

 private:
  std::uint64_t state_;
};

}  // namespace haarlab
