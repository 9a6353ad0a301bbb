#include "sdual/fusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdual {

namespace {

using Memo = std::map<std::pair<int, std::vector<int>>, BigInt>;

BigInt dim_rec(const FusionRing& ring, Memo& memo, int genus, std::vector<int> pts)
{
  std::sort(pts.begin(), pts.end());
  std::pair key{genus, pts};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt out = 0;
  if (genus > 0) {
    for (int mu = 0; mu < ring.size(); ++mu) {
      std::vector<int> next = pts;
      next.push_back(mu);
      next.push_back(ring.dual[mu]);
      out += dim_rec(ring, memo, genus - 1, std::move(next));
    }
  } else if (pts.size() <= 3) {
    while (pts.size() < 3) pts.push_back(0);
    out = ring.table[pts[0]][pts[1]][ring.dual[pts[2]]];
  } else {
    const int a = pts[0], b = pts[1];
    std::vector<int> rest(pts.begin() + 2, pts.end());
    for (int nu = 0; nu < ring.size(); ++nu) {
      const std::int64_t c = ring.table[a][b][nu];
      if (c == 0) continue;
      std::vector<int> next = rest;
      next.push_back(nu);
      out += c * dim_rec(ring, memo, 0, std::move(next));
    }
  }
  memo.emplace(std::move(key), out);
  return out;
}

}  // namespace

BigInt verlinde_dim(const FusionRing& ring, const CurveData& curve)
{
  if (curve.genus < 0) throw std::invalid_argument("genus must be nonnegative");
  std::vector<int> pts;
  for (const Weight& w : curve.insertions) {
    if (w.algebra != ring.algebra) throw std::invalid_argument("insertion " + w.to_string() + " belongs to " + w.algebra.name());
    pts.push_back(ring.index_of(w));
  }
  Memo memo;
  return dim_rec(ring, memo, curve.genus, std::move(pts));
}

bool propagation_check(const FusionRing& ring, const CurveData& curve)
{
  CurveData extended = curve;
  extended.insertions.push_back(ring.basis[0]);
  return verlinde_dim(ring, extended) == verlinde_dim(ring, curve);
}

}  // namespace sdual
