#include "sdual/pic_relation.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdual {

namespace {

void require_stable(int g, int n)
{
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
    throw std::invalid_argument("(g,n) = (" + std::to_string(g) + "," + std::to_string(n) + ") is not stable");
}

std::vector<int> complement(int n, const std::vector<int>& A)
{
  std::vector<int> c;
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(A.begin(), A.end(), i)) c.push_back(i);
  return c;
}

bool stable_side(int h, std::size_t marks) { return h > 0 || marks >= 2; }

}  // namespace

bool operator<(const BoundaryIndex& x, const BoundaryIndex& y)
{
  if (x.irreducible != y.irreducible) return x.irreducible;
  if (x.h != y.h) return x.h < y.h;
  if (x.A.size() != y.A.size()) return x.A.size() < y.A.size();
  return x.A < y.A;
}

std::string BoundaryIndex::to_string() const
{
  if (irreducible) return "irr";
  std::string s = "(" + std::to_string(h) + ",{";
  for (std::size_t i = 0; i < A.size(); ++i) s += (i ? "," : "") + std::to_string(A[i]);
  return s + "})";
}

BoundaryIndex canonical_boundary(int g, int n, int h, std::vector<int> A)
{
  std::sort(A.begin(), A.end());
  if (h < 0 || h > g || std::adjacent_find(A.begin(), A.end()) != A.end() ||
      (!A.empty() && (A.front() < 1 || A.back() > n)))
    throw std::invalid_argument("not a boundary divisor of M_{" + std::to_string(g) + "," + std::to_string(n) + "}");
  std::vector<int> Ac = complement(n, A);
  bool flip = g - h < h;
  if (g - h == h) flip = n > 0 ? A.empty() || A.front() != 1 : Ac < A;
  return flip ? BoundaryIndex{false, g - h, Ac} : BoundaryIndex{false, h, A};
}

std::vector<BoundaryIndex> boundary_strata(int g, int n)
{
  require_stable(g, n);
  std::vector<BoundaryIndex> out;
  if (g >= 1) out.push_back(BoundaryIndex::irr());
  for (int h = 0; 2 * h <= g; ++h)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> A;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) A.push_back(i + 1);
      if (!stable_side(h, A.size()) || !stable_side(g - h, n - A.size())) continue;
      const BoundaryIndex b = canonical_boundary(g, n, h, A);
      if (b.h == h && b.A == A) out.push_back(b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

Rational PicRelation::coefficient(const BoundaryIndex& b) const
{
  auto it = boundary.find(b);
  return it == boundary.end() ? Rational(0) : it->second;
}

PicRelation emit_relation(int g, int n)
{
  // (1,0) allowed: only delta_irr
  if (g != 1 || n != 0) require_stable(g, n);
  PicRelation r;
  r.g = g;
  r.n = n;
  r.F = closed_form_F_integer(g, n);
  if (r.F == 0)
    throw std::domain_error("F(" + std::to_string(g) + "," + std::to_string(n) + ") = 0, relation undefined");
  const Rational F(r.F);
  r.hodge_coeff = 4;
  r.psi_coeffs.assign(n, Rational(1));
  r.g2_block_coeff = 1 / F;
  r.f4_block_coeff = 1;
  const auto strata = g == 1 && n == 0 ? std::vector<BoundaryIndex>{BoundaryIndex::irr()} : boundary_strata(g, n);
  for (const BoundaryIndex& b : strata) {
    const int a = static_cast<int>(b.A.size());
    const BigInt num = b.irreducible ? closed_form_F_integer(g - 1, n + 2)
                                     : closed_form_F_integer(b.h, a + 1) * closed_form_F_integer(g - b.h, n - a + 1);
    r.boundary.emplace(b, Rational(num) / F);
  }
  return r;
}

PicRelation relabel(const PicRelation& r, const std::vector<int>& perm)
{
  if (static_cast<int>(perm.size()) != r.n) throw std::invalid_argument("permutation has the wrong length");
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < r.n; ++i)
    if (check[i] != i + 1) throw std::invalid_argument("not a permutation of the markings");
  PicRelation out = r;
  out.boundary.clear();
  for (int i = 0; i < r.n; ++i) out.psi_coeffs[perm[i] - 1] = r.psi_coeffs[i];
  for (const auto& [b, c] : r.boundary) {
    if (b.irreducible) {
      out.boundary.emplace(b, c);
      continue;
    }
    std::vector<int> A;
    for (int i : b.A) A.push_back(perm[i - 1]);
    out.boundary.emplace(canonical_boundary(r.g, r.n, b.h, A), c);
  }
  return out;
}

ConsistencyReport relation_consistency(int g, int n)
{
  if (g < 1 || n < 0) throw std::invalid_argument("relation_consistency needs g >= 1");
  ConsistencyReport rep;
  rep.g = g;
  rep.n = n;
  rep.F = closed_form_F(g, n);
  rep.recursion_sum = closed_form_F(g - 1, n + 2) + closed_form_F(g - 1, n);
  rep.recursion_ok = rep.F == rep.recursion_sum;
  if (!rep.recursion_ok)
    rep.problems.push_back("F(g,n) = " + rep.F.to_string() + " but F(g-1,n+2)+F(g-1,n) = " + rep.recursion_sum.to_string());
  rep.numerators_ok = true;
  if (2 * g - 2 + n > 0) {
    for (const BoundaryIndex& b : boundary_strata(g, n)) {
      if (b.irreducible) continue;
      const int a = static_cast<int>(b.A.size());
      const QSqrt5 num = closed_form_F(b.h, a + 1) * closed_form_F(g - b.h, n - a + 1);
      if (!num.is_rational() || !is_integer(num.a) || num.a <= 0) {
        rep.numerators_ok = false;
        rep.problems.push_back("numerator of " + b.to_string() + " is " + num.to_string());
      }
    }
  }
  return rep;
}

}  // namespace sdual
