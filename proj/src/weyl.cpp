#include "sdual/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sdual {

void reflect_in_place(const RootDatum& d, Labels& x, int i)
{
  const int c = x[i];
  if (c == 0) return;
  const auto& row = d.cartan[i];
  for (int j = 0; j < d.rank(); ++j) x[j] -= c * row[j];
}

DominantImage to_dominant(const RootDatum& d, Labels x)
{
  DominantImage out;
  const int n = d.rank();
  while (true) {
    int i = 0;
    while (i < n && x[i] >= 0) ++i;
    if (i == n) break;
    reflect_in_place(d, x, i);
    out.length_parity ^= 1;
  }
  out.labels = std::move(x);
  return out;
}

ShiftedReflection reflect_shifted_to_dominant(const RootDatum& d, Labels x)
{
  DominantImage img = to_dominant(d, std::move(x));
  ShiftedReflection out{std::move(img.labels), img.length_parity ? -1 : 1};
  if (std::find(out.labels.begin(), out.labels.end(), 0) != out.labels.end()) out.sign = 0;
  return out;
}

ShiftedReflection reflect_shifted_to_alcove(const RootDatum& d, Labels x, int shifted_level)
{
  const int n = d.rank();
  int sign = 1;
  while (true) {
    int i = 0;
    while (i < n && x[i] >= 0) ++i;
    if (i < n) {
      reflect_in_place(d, x, i);
      sign = -sign;
      continue;
    }
    const int excess = d.level_of(x) - shifted_level;
    if (excess > 0) {
      for (int j = 0; j < n; ++j) x[j] -= excess * d.highest_root_labels[j];
      sign = -sign;
      continue;
    }
    break;
  }
  const bool on_wall = std::find(x.begin(), x.end(), 0) != x.end() || d.level_of(x) == shifted_level;
  return ShiftedReflection{std::move(x), on_wall ? 0 : sign};
}

namespace {

BigInt macdonald_product(const RootDatum& d, const std::vector<bool>& allowed)
{
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t r = 0; r < d.positive_roots.size(); ++r) {
    const Labels& root = d.positive_roots[r];
    bool inside = true;
    for (int i = 0; i < d.rank() && inside; ++i)
      if (root[i] != 0 && !allowed[i]) inside = false;
    if (!inside) continue;
    num *= d.root_heights[r] + 1;
    den *= d.root_heights[r];
  }
  return num / den;
}

}  // namespace

BigInt weyl_group_order(const RootDatum& d) { return macdonald_product(d, std::vector<bool>(d.rank(), true)); }

BigInt stabilizer_order(const RootDatum& d, const Labels& dominant)
{
  std::vector<bool> zero(d.rank());
  for (int i = 0; i < d.rank(); ++i) zero[i] = dominant[i] == 0;
  return macdonald_product(d, zero);
}

BigInt orbit_size(const RootDatum& d, const Labels& dominant)
{
  if (!is_dominant(dominant)) throw std::invalid_argument("orbit_size expects a dominant weight");
  return weyl_group_order(d) / stabilizer_order(d, dominant);
}

std::vector<Labels> weyl_orbit(const RootDatum& d, const Labels& dominant)
{
  if (!is_dominant(dominant)) throw std::invalid_argument("weyl_orbit expects a dominant weight");
  std::set<Labels> seen{dominant};
  std::vector<Labels> layer{dominant};
  std::vector<Labels> out{dominant};
  // Reflecting only along positive labels walks each orbit element from the dominant one downward.
  while (!layer.empty()) {
    std::set<Labels> next;
    for (const Labels& x : layer)
      for (int i = 0; i < d.rank(); ++i)
        if (x[i] > 0) {
          Labels y = x;
          reflect_in_place(d, y, i);
          if (!seen.count(y)) next.insert(std::move(y));
        }
    layer.assign(next.begin(), next.end());
    for (const Labels& y : layer) {
      seen.insert(y);
      out.push_back(y);
    }
  }
  return out;
}

Labels act(const WeylElement& w, const Labels& x)
{
  const std::size_t n = x.size();
  Labels out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += w.matrix[i][j] * x[j];
  return out;
}

std::vector<WeylElement> weyl_group_elements(const RootDatum& d, std::size_t limit)
{
  const BigInt order = weyl_group_order(d);
  if (order > limit)
    throw std::invalid_argument("Weyl group of " + d.algebra.name() + " has " + order.str() + " elements, above the limit of " +
                                std::to_string(limit));
  const int n = d.rank();
  IntMatrix identity(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) identity[i][i] = 1;
  std::vector<WeylElement> out{WeylElement{identity, 1}};
  std::set<Labels> seen{d.weyl_vector};
  std::size_t begin = 0;
  while (begin < out.size()) {
    const std::size_t end = out.size();
    for (std::size_t e = begin; e < end; ++e) {
      for (int i = 0; i < n; ++i) {
        // s_i * w: rows transform as row_j -= cartan[i][j] * row_i.
        WeylElement next{out[e].matrix, -out[e].sign};
        for (int j = 0; j < n; ++j)
          if (d.cartan[i][j] != 0)
            for (int k = 0; k < n; ++k) next.matrix[j][k] -= d.cartan[i][j] * out[e].matrix[i][k];
        Labels key = act(next, d.weyl_vector);
        if (seen.insert(key).second) out.push_back(std::move(next));
      }
    }
    begin = end;
  }
  if (BigInt(out.size()) != order) throw std::logic_error("Weyl group enumeration disagrees with |W|");
  return out;
}

}  // namespace sdual
