#include "polyhodge/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace polyhodge {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("floor_div: zero divisor");
  Int q = a / b;  // truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int rational_floor(const Rational& r) {
  return floor_div(numerator(r), denominator(r));
}

Rational fractional_part(const Rational& r) {
  return r - Rational(rational_floor(r));
}

bool is_integral(const Rational& r) {
  return denominator(r) == 1;
}

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r;  // cpp_rational prints "num/den", omitting "/1"
  return out.str();
}

std::string to_string(const Int& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

namespace {

Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty integer");
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("parse_rational: lone sign");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("parse_rational: bad digit in '" + std::string(text) + "'");
  }
  return Int(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("parse_rational: non-positive denominator");
  return Rational(num, den);
}

}  // namespace polyhodge
