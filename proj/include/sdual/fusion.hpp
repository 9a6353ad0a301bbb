#pragma once

#include "sdual/lie_algebra.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace sdual {

/// Level-l fusion ring of g. basis = level_weights(d, level), vacuum first.
struct FusionRing {
  LieAlgebraId algebra;
  int level = 0;
  std::vector<Weight> basis;
  std::vector<int> dual;                                    // index of lambda*
  std::vector<std::vector<std::vector<std::int64_t>>> table;  // table[i][j][k] = N^k_{ij}

  int size() const { return static_cast<int>(basis.size()); }
  /// Throws std::invalid_argument if w is not in the basis.
  int index_of(const Weight& w) const;
  std::int64_t coefficient(const Weight& lambda, const Weight& mu, const Weight& nu) const;
  std::map<Weight, std::int64_t> product(const Weight& lambda, const Weight& mu) const;
};

/// Kac-Walton: V_lambda (x) V_mu, each constituent folded into the level-l alcove with signs.
std::map<Weight, std::int64_t> kac_walton(const RootDatum& d, int level, const Weight& lambda, const Weight& mu);

FusionRing fusion_ring(const RootDatum& d, int level);

/// Memoized fusion_ring; safe to call concurrently.
const FusionRing& cached_fusion_ring(const LieAlgebraId& id, int level);

struct FusionAxioms {
  bool commutative = false;
  bool unit = false;
  bool associative = false;
  bool duality = false;  // N^0_{lambda mu} = delta_{mu, lambda*}
  bool all() const { return commutative && unit && associative && duality; }
};

FusionAxioms check_fusion_axioms(const FusionRing& ring);

struct CurveData {
  int genus = 0;
  std::vector<Weight> insertions;
};

/// Dimension of the space of conformal blocks, by factorization:
/// genus first (sum over mu, mu* at the new pair of points), then contraction of
/// two insertions through the fusion rules, down to N^{nu*}_{lambda mu} on three points.
BigInt verlinde_dim(const FusionRing& ring, const CurveData& curve);

/// verlinde_dim is unchanged by an extra vacuum insertion.
bool propagation_check(const FusionRing& ring, const CurveData& curve);

}  // namespace sdual
