#pragma once

#include "sdual/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>

namespace sdual {

// Pairing symbols of the three-point engine:
//   pa = <X_a, X_-a>, pb = <X_b, X_-b>, aH = a(H), bH = b(H), ab = (a, b), hh = <H, H>
enum class Symbol { pa, pb, aH, bH, ab, hh };
inline constexpr int kSymbolCount = 6;

std::string_view symbol_name(Symbol s);
/// Throws std::invalid_argument for unknown names.
Symbol parse_symbol(std::string_view name);

using Monomial = std::array<int, kSymbolCount>;

/// Polynomial in the pairing symbols with rational coefficients; zero terms are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);
  Polynomial(int c) : Polynomial(Rational(c)) {}
  static Polynomial symbol(Symbol s);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term.
  Rational constant() const;
  /// True if every monomial contains s.
  bool divisible_by(Symbol s) const;

  Polynomial substitute(Symbol s, const Rational& value) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Polynomial(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// "-pa", "bH*pb", "2*pa^2 - 1/3*hh", "0".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

}  // namespace sdual
