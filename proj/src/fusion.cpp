#include "sdual/fusion.hpp"

#include "sdual/weyl.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace sdual {

int FusionRing::index_of(const Weight& w) const
{
  if (w.algebra != algebra) throw std::invalid_argument("weight belongs to " + w.algebra.name() + ", ring is " + algebra.name());
  for (int i = 0; i < size(); ++i)
    if (basis[i].labels == w.labels) return i;
  throw std::invalid_argument("weight " + w.to_string() + " is not in P_" + std::to_string(level) + "(" + algebra.name() + ")");
}

std::int64_t FusionRing::coefficient(const Weight& lambda, const Weight& mu, const Weight& nu) const
{
  return table[index_of(lambda)][index_of(mu)][index_of(nu)];
}

std::map<Weight, std::int64_t> FusionRing::product(const Weight& lambda, const Weight& mu) const
{
  const auto& row = table[index_of(lambda)][index_of(mu)];
  std::map<Weight, std::int64_t> out;
  for (int k = 0; k < size(); ++k)
    if (row[k]) out.emplace(basis[k], row[k]);
  return out;
}

std::map<Weight, std::int64_t> kac_walton(const RootDatum& d, int level, const Weight& lambda, const Weight& mu)
{
  if (level < 0) throw std::invalid_argument("level must be nonnegative");
  for (const Weight* w : {&lambda, &mu})
    if (d.level_of(w->labels) > level) throw std::invalid_argument("weight " + w->to_string() + " lies above the level");
  const int shifted = level + dual_coxeter(d);
  std::map<Labels, std::int64_t> acc;
  for (const auto& [nu, m] : tensor_decompose(d, lambda, mu)) {
    Labels x = nu.labels;
    for (int& v : x) ++v;
    ShiftedReflection r = reflect_shifted_to_alcove(d, std::move(x), shifted);
    if (r.sign == 0) continue;
    for (int& v : r.labels) --v;
    acc[r.labels] += r.sign * m;
  }
  std::map<Weight, std::int64_t> out;
  for (const auto& [w, m] : acc) {
    if (m < 0) throw std::logic_error("negative Kac-Walton coefficient");
    if (m > 0) out.emplace(Weight{d.algebra, w}, m);
  }
  return out;
}

FusionRing fusion_ring(const RootDatum& d, int level)
{
  if (level < 1) throw std::invalid_argument("fusion rings need level >= 1");
  FusionRing ring;
  ring.algebra = d.algebra;
  ring.level = level;
  ring.basis = level_weights(d, level);
  const int n = ring.size();
  for (const Weight& w : ring.basis) ring.dual.push_back(ring.index_of(dual_weight(d, w)));
  ring.table.assign(n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      for (const auto& [w, m] : kac_walton(d, level, ring.basis[i], ring.basis[j])) {
        const int k = ring.index_of(w);
        ring.table[i][j][k] = m;
        ring.table[j][i][k] = m;
      }
    }
  return ring;
}

const FusionRing& cached_fusion_ring(const LieAlgebraId& id, int level)
{
  static std::mutex mutex;
  static std::map<std::pair<LieAlgebraId, int>, std::unique_ptr<FusionRing>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({id, level});
    if (it != cache.end()) return *it->second;
  }
  auto ring = std::make_unique<FusionRing>(fusion_ring(root_datum(id), level));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(std::pair{id, level}, std::move(ring));
  return *it->second;
}

FusionAxioms check_fusion_axioms(const FusionRing& ring)
{
  FusionAxioms ax{true, true, true, true};
  const int n = ring.size();
  const auto& N = ring.table;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (N[i][j][k] != N[j][i][k]) ax.commutative = false;
        if (N[i][0][k] != (i == k ? 1 : 0)) ax.unit = false;
      }
      if (N[i][j][0] != (j == ring.dual[i] ? 1 : 0)) ax.duality = false;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          // (ij)k vs i(jk), coefficient of m
          std::int64_t left = 0, right = 0;
          for (int p = 0; p < n; ++p) {
            left += N[i][j][p] * N[p][k][m];
            right += N[j][k][p] * N[i][p][m];
          }
          if (left != right) ax.associative = false;
        }
  return ax;
}

}  // namespace sdual
