#pragma once

#include "sdual/rational.hpp"

#include <string>

namespace sdual {

/// a + b sqrt(5) with rational a, b.
struct QSqrt5 {
  Rational a;
  Rational b;

  QSqrt5() = default;
  QSqrt5(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
  QSqrt5(int a_) : a(a_), b(0) {}

  QSqrt5 conjugate() const { return {a, -b}; }
  Rational norm() const { return a * a - 5 * b * b; }
  bool is_rational() const { return b == 0; }
  /// Throws std::domain_error on zero.
  QSqrt5 inverse() const;
  QSqrt5 pow(int e) const;

  std::string to_string() const;

  friend bool operator==(const QSqrt5&, const QSqrt5&) = default;
};

QSqrt5 operator+(const QSqrt5& x, const QSqrt5& y);
QSqrt5 operator-(const QSqrt5& x, const QSqrt5& y);
QSqrt5 operator-(const QSqrt5& x);
QSqrt5 operator*(const QSqrt5& x, const QSqrt5& y);
QSqrt5 operator/(const QSqrt5& x, const QSqrt5& y);

/// ((5+sqrt5)/2)^(g-1) ((1+sqrt5)/2)^n + ((5-sqrt5)/2)^(g-1) ((1-sqrt5)/2)^n.
QSqrt5 closed_form_F(int g, int n);

/// closed_form_F as an integer; throws std::logic_error if it is not one.
BigInt closed_form_F_integer(int g, int n);

}  // namespace sdual
