#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace haarlab {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision numerator/denominator, always in
// lowest terms with positive denominator. No floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

// 2^e as an exact rational; e may be negative.
Rational pow2(int e);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q",
// sign on the numerator ("3", "-5/8").
std::string to_string(const Rational& value);

// Parses "p" or "p/q" with optional leading '-'. Throws Errc::schema on
// malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace haarlab
