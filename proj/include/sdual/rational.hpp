#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sdual {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) { return Rational(BigInt(num), BigInt(den)); }

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);

}  // namespace sdual
