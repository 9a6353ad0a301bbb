#pragma once

#include "sdual/qsqrt5.hpp"
#include "sdual/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace sdual {

// Boundary divisor of M_{g,n}-bar: delta_irr, or delta_{h,A} with A a set of markings (1-based)
// on the genus-h side. Reducible ones are canonical: h < g-h, or h = g-h and 1 in A.
struct BoundaryIndex {
  bool irreducible = false;
  int h = 0;
  std::vector<int> A;

  static BoundaryIndex irr() { return BoundaryIndex{true, 0, {}}; }
  std::string to_string() const;  // "irr", "(1,{})", "(0,{1,3})"

  friend bool operator==(const BoundaryIndex&, const BoundaryIndex&) = default;
  // irr first, then h, |A|, lexicographic A
  friend bool operator<(const BoundaryIndex& x, const BoundaryIndex& y);
};

/// Canonical representative of delta_{h,A} = delta_{g-h,A^c}. A need not be sorted.
BoundaryIndex canonical_boundary(int g, int n, int h, std::vector<int> A);

/// All stable boundary divisors, irr first when g >= 1. Throws std::invalid_argument if 2g-2+n <= 0.
std::vector<BoundaryIndex> boundary_strata(int g, int n);

// 4 lambda + sum psi_i = (1/F) c1(V(g2)) + c1(V(f4)) + F(g-1,n+2)/F delta_irr + sum F(h,|A|+1) F(g-h,n-|A|+1)/F delta_{h,A}
struct PicRelation {
  int g = 0;
  int n = 0;
  BigInt F;
  Rational hodge_coeff;
  std::vector<Rational> psi_coeffs;
  Rational g2_block_coeff;
  Rational f4_block_coeff;
  std::map<BoundaryIndex, Rational> boundary;

  Rational coefficient(const BoundaryIndex& b) const;  // 0 if absent
};

/// (1,0) is accepted with delta_irr only. Throws std::invalid_argument for other unstable (g,n) and std::domain_error if F(g,n) = 0.
PicRelation emit_relation(int g, int n);

/// The relation with markings renamed i -> perm[i-1]; perm is a permutation of 1..n.
PicRelation relabel(const PicRelation& r, const std::vector<int>& perm);

struct ConsistencyReport {
  int g = 0;
  int n = 0;
  QSqrt5 F;
  QSqrt5 recursion_sum;  // F(g-1,n+2) + F(g-1,n)
  bool recursion_ok = false;
  bool numerators_ok = false;
  std::vector<std::string> problems;
  bool pass() const { return recursion_ok && numerators_ok; }
};

/// g >= 1. Checks the recursion exactly and that every boundary numerator is a positive integer.
ConsistencyReport relation_consistency(int g, int n);

}  // namespace sdual
