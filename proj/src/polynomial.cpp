#include "sdual/polynomial.hpp"

#include <functional>
#include <stdexcept>

namespace sdual {

namespace {

constexpr std::array<std::string_view, kSymbolCount> kNames{"pa", "pb", "aH", "bH", "ab", "hh"};

}  // namespace

std::string_view symbol_name(Symbol s) { return kNames[static_cast<int>(s)]; }

Symbol parse_symbol(std::string_view name)
{
  for (int i = 0; i < kSymbolCount; ++i)
    if (kNames[i] == name) return static_cast<Symbol>(i);
  throw std::invalid_argument("unknown pairing symbol '" + std::string(name) + "'");
}

Polynomial::Polynomial(const Rational& c) { add_term(Monomial{}, c); }

Polynomial Polynomial::symbol(Symbol s)
{
  Polynomial p;
  Monomial m{};
  m[static_cast<int>(s)] = 1;
  p.add_term(m, 1);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }

Rational Polynomial::constant() const
{
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::divisible_by(Symbol s) const
{
  for (const auto& [m, c] : terms_)
    if (m[static_cast<int>(s)] == 0) return false;
  return true;
}

Polynomial Polynomial::substitute(Symbol s, const Rational& value) const
{
  Polynomial out;
  const int i = static_cast<int>(s);
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    Rational f = c;
    for (int e = 0; e < m[i]; ++e) f *= value;
    r[i] = 0;
    out.add_term(r, f);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
  Polynomial out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m;
      for (int i = 0; i < kSymbolCount; ++i) m[i] = m1[i] + m2[i];
      out.add_term(m, c1 * c2);
    }
  *this = std::move(out);
  return *this;
}

std::string Polynomial::to_string() const
{
  if (terms_.empty()) return "0";
  std::string out;
  // highest total degree first, then the map order reversed
  std::multimap<int, std::pair<Monomial, Rational>, std::greater<>> ordered;
  for (const auto& [m, c] : terms_) {
    int deg = 0;
    for (int e : m) deg += e;
    ordered.emplace(deg, std::pair{m, c});
  }
  bool first = true;
  for (const auto& [deg, mc] : ordered) {
    const auto& [m, c] = mc;
    Rational a = c;
    if (first) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    if (a < 0) a = -a;
    std::string mono;
    for (int i = 0; i < kSymbolCount; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kNames[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty())
      out += sdual::to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += sdual::to_string(a) + "*" + mono;
    first = false;
  }
  return out;
}

}  // namespace sdual
