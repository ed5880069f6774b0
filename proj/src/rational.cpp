#include "haarlab/rational.hpp"

#include <cctype>

#include "haarlab/error.hpp"

namespace haarlab {

Rational pow2(int e) {
  if (e >= 0) return Rational(BigInt(1) << e);
  return Rational(BigInt(1), BigInt(1) << (-e));
}

std::string to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

namespace {

BigInt parse_integer(const std::string& text) {
  if (text.empty()) fail(Errc::schema, "empty integer in rational");
  std::size_t start = 0;
  if (text[0] == '-' || text[0] == '+') start = 1;
  if (start == text.size()) fail(Errc::schema, "bare sign in rational");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      fail(Errc::schema, "invalid rational text: '" + text + "'");
    }
  }
  return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) fail(Errc::schema, "zero denominator: '" + text + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

}  // namespace haarlab
