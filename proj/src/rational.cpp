#include "sdual/rational.hpp"

#include <stdexcept>

namespace sdual {

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& q)
{
  if (is_integer(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

Rational parse_rational(const std::string& text)
{
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text.c_str()));
    BigInt num(text.substr(0, slash).c_str());
    BigInt den(text.substr(slash + 1).c_str());
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
}

}  // namespace sdual
