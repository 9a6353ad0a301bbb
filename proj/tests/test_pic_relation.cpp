#include "doctest.h"

#include "sdual/pic_relation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

using namespace sdual;

namespace {

using Side = std::pair<int, unsigned>;  // genus, marking bitmask

// unordered pairs {(h,A), (g-h,A^c)} with both sides stable
std::set<std::pair<Side, Side>> brute_force_strata(int g, int n)
{
  std::set<std::pair<Side, Side>> seen;
  const unsigned all = (1u << n) - 1;
  for (int h = 0; h <= g; ++h)
    for (unsigned A = 0; A <= all; ++A) {
      const Side x{h, A}, y{g - h, all & ~A};
      auto ok = [](const Side& s) { return s.first > 0 || std::popcount(s.second) >= 2; };
      if (ok(x) && ok(y)) seen.insert(std::minmax(x, y));
    }
  return seen;
}

unsigned mask_of(const std::vector<int>& A)
{
  unsigned m = 0;
  for (int i : A) m |= 1u << (i - 1);
  return m;
}

}  // namespace

TEST_CASE("boundary strata against brute-force enumeration")
{
  for (int g = 0; g <= 4; ++g)
    for (int n = 0; n <= 5; ++n) {
      if (2 * g - 2 + n <= 0) {
        CHECK_THROWS_AS(boundary_strata(g, n), std::invalid_argument);
        continue;
      }
      const auto strata = boundary_strata(g, n);
      const auto oracle = brute_force_strata(g, n);
      const std::size_t irr = g >= 1 ? 1 : 0;
      CHECK_MESSAGE(strata.size() == oracle.size() + irr, "g=", g, " n=", n);
      CHECK(std::is_sorted(strata.begin(), strata.end()));
      CHECK(std::adjacent_find(strata.begin(), strata.end()) == strata.end());
      if (!strata.empty()) CHECK(strata.front().irreducible == (g >= 1));
      std::set<std::pair<Side, Side>> hit;
      for (const BoundaryIndex& b : strata) {
        if (b.irreducible) continue;
        CHECK(canonical_boundary(g, n, b.h, b.A) == b);
        CHECK(2 * b.h <= g);
        if (2 * b.h == g && n > 0) CHECK((!b.A.empty() && b.A.front() == 1));
        const unsigned all = (1u << n) - 1;
        const Side x{b.h, mask_of(b.A)}, y{g - b.h, all & ~mask_of(b.A)};
        CHECK(oracle.count(std::minmax(x, y)) == 1);
        hit.insert(std::minmax(x, y));
      }
      CHECK(hit.size() == oracle.size());
    }
}

TEST_CASE("small strata lists")
{
  CHECK(boundary_strata(1, 1) == std::vector<BoundaryIndex>{BoundaryIndex::irr()});
  CHECK(boundary_strata(2, 0) == std::vector<BoundaryIndex>{BoundaryIndex::irr(), BoundaryIndex{false, 1, {}}});
  CHECK(boundary_strata(0, 4) == std::vector<BoundaryIndex>{BoundaryIndex{false, 0, {1, 2}}, BoundaryIndex{false, 0, {1, 3}},
                                                            BoundaryIndex{false, 0, {1, 4}}});
  CHECK(canonical_boundary(2, 3, 1, {2, 3}) == BoundaryIndex{false, 1, {1}});
  CHECK(canonical_boundary(3, 2, 2, {1}) == BoundaryIndex{false, 1, {2}});
  CHECK(BoundaryIndex{false, 0, {1, 3}}.to_string() == "(0,{1,3})");
  CHECK_THROWS_AS(canonical_boundary(2, 2, 1, {3}), std::invalid_argument);
}

TEST_CASE("relation coefficients")
{
  const PicRelation r11 = emit_relation(1, 1);
  CHECK(r11.F == 1);
  CHECK(r11.coefficient(BoundaryIndex::irr()) == 1);
  CHECK(r11.boundary.size() == 1);
  CHECK(r11.psi_coeffs == std::vector<Rational>{1});
  CHECK(r11.hodge_coeff == 4);

  const PicRelation r20 = emit_relation(2, 0);
  CHECK(r20.F == 5);
  CHECK(r20.coefficient(BoundaryIndex{false, 1, {}}) == make_rational(1, 5));
  CHECK(r20.coefficient(BoundaryIndex::irr()) == make_rational(3, 5));
  CHECK(r20.g2_block_coeff == make_rational(1, 5));
  CHECK(r20.f4_block_coeff == 1);

  // genus one without markings: irr coefficient F(0,2)/F(1,0)
  const PicRelation r10 = emit_relation(1, 0);
  CHECK(r10.coefficient(BoundaryIndex::irr()) * Rational(r10.F) == Rational(closed_form_F_integer(0, 2)));
  CHECK(Rational(r10.F) == Rational(closed_form_F_integer(0, 2) + closed_form_F_integer(0, 0)));

  CHECK_THROWS_AS(emit_relation(0, 2), std::invalid_argument);
  CHECK(r10.coefficient(BoundaryIndex{false, 0, {}}) == 0);
}

TEST_CASE("coefficient properties")
{
  for (int g = 0; g <= 5; ++g)
    for (int n = 0; n <= 6; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const PicRelation r = emit_relation(g, n);
      for (const auto& [b, c] : r.boundary) {
        CHECK(c > 0);
        CHECK(is_integer(c * Rational(r.F)));
        if (b.irreducible) continue;
        // value is the same from either side of the node
        const int a = static_cast<int>(b.A.size());
        const BigInt here = closed_form_F_integer(b.h, a + 1) * closed_form_F_integer(g - b.h, n - a + 1);
        const BigInt there = closed_form_F_integer(g - b.h, n - a + 1) * closed_form_F_integer(b.h, a + 1);
        CHECK(here == there);
        CHECK(c == Rational(here) / Rational(r.F));
      }
      if (n == 0 && g >= 2) CHECK_MESSAGE(r.coefficient(BoundaryIndex::irr()) < 1, "g=", g);
    }
}

TEST_CASE("relabeling markings")
{
  std::mt19937 rng(11);
  for (int g = 0; g <= 3; ++g)
    for (int n = 1; n <= 5; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const PicRelation r = emit_relation(g, n);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 1);
      for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const PicRelation s = relabel(r, perm);
        CHECK(s.boundary == r.boundary);
        CHECK(s.psi_coeffs == r.psi_coeffs);
      }
    }
  CHECK_THROWS_AS(relabel(emit_relation(1, 2), {1, 1}), std::invalid_argument);
}

TEST_CASE("recursion identity")
{
  for (int g = 1; g <= 5; ++g)
    for (int n = 0; n <= 6; ++n) {
      const ConsistencyReport rep = relation_consistency(g, n);
      CHECK_MESSAGE(rep.pass(), "g=", g, " n=", n);
      CHECK(rep.problems.empty());
    }
  const ConsistencyReport r20 = relation_consistency(2, 0);
  CHECK(r20.F == QSqrt5(5));
  CHECK(closed_form_F(1, 2) == QSqrt5(3));
  CHECK(closed_form_F(1, 0) == QSqrt5(2));
  CHECK_THROWS_AS(relation_consistency(0, 3), std::invalid_argument);
}
