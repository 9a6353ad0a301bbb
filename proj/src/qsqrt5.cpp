#include "sdual/qsqrt5.hpp"

#include <stdexcept>

namespace sdual {

QSqrt5 operator+(const QSqrt5& x, const QSqrt5& y) { return {x.a + y.a, x.b + y.b}; }
QSqrt5 operator-(const QSqrt5& x, const QSqrt5& y) { return {x.a - y.a, x.b - y.b}; }
QSqrt5 operator-(const QSqrt5& x) { return {-x.a, -x.b}; }
QSqrt5 operator*(const QSqrt5& x, const QSqrt5& y) { return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a}; }
QSqrt5 operator/(const QSqrt5& x, const QSqrt5& y) { return x * y.inverse(); }

QSqrt5 QSqrt5::inverse() const
{
  const Rational n = norm();
  if (n == 0) throw std::domain_error("division by zero in Q(sqrt5)");
  return {a / n, -b / n};
}

QSqrt5 QSqrt5::pow(int e) const
{
  QSqrt5 base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? -static_cast<long>(e) : e;
  QSqrt5 out(1);
  while (k) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

std::string QSqrt5::to_string() const
{
  if (b == 0) return sdual::to_string(a);
  std::string s = a == 0 ? "" : sdual::to_string(a) + (b > 0 ? "+" : "");
  return s + sdual::to_string(b) + "*sqrt5";
}

QSqrt5 closed_form_F(int g, int n)
{
  if (g < 0 || n < 0) throw std::invalid_argument("closed_form_F needs g, n >= 0");
  const Rational half = make_rational(1, 2);
  const QSqrt5 big(make_rational(5, 2), half);
  const QSqrt5 golden(half, half);
  const QSqrt5 x = big.pow(g - 1) * golden.pow(n);
  return x + x.conjugate();
}

BigInt closed_form_F_integer(int g, int n)
{
  const QSqrt5 f = closed_form_F(g, n);
  if (!f.is_rational() || !is_integer(f.a))
    throw std::logic_error("F(" + std::to_string(g) + "," + std::to_string(n) + ") = " + f.to_string() + " is not an integer");
  return numerator_of(f.a);
}

}  // namespace sdual
