#include "sdual/affine_characters.hpp"

#include "sdual/conformal_embedding.hpp"
#include "sdual/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace sdual {

namespace {

Labels add_rho(Labels x)
{
  for (int& v : x) ++v;
  return x;
}

// Dominant mu in lambda + Q with |mu + rho|^2 <= bound (scaled form).
std::vector<Labels> dominant_candidates(const RootDatum& d, const Labels& lambda, std::int64_t bound)
{
  const int n = d.rank();
  std::vector<Labels> out;
  Labels cur(n, 0);
  auto norm = [&] {
    const Labels r = add_rho(cur);
    return d.scaled_inner(r, r);
  };
  // the norm grows in every label, so a prefix with zero tail is a lower bound
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      Labels diff(n);
      for (int j = 0; j < n; ++j) diff[j] = lambda[j] - cur[j];
      if (d.in_root_lattice(diff)) out.push_back(cur);
      return;
    }
    for (cur[i] = 0; norm() <= bound; ++cur[i]) self(self, i + 1);
    cur[i] = 0;
  };
  rec(rec, 0);
  return out;
}

}  // namespace

GradedDims graded_dims(const RootDatum& d, int level, const Weight& lambda, int depth)
{
  if (lambda.algebra != d.algebra || static_cast<int>(lambda.labels.size()) != d.rank())
    throw std::invalid_argument("weight does not belong to " + d.algebra.name());
  if (level < 0) throw std::invalid_argument("level must be nonnegative");
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (!is_dominant(lambda.labels) || d.level_of(lambda.labels) > level)
    throw std::invalid_argument("weight " + lambda.to_string() + " is not in P_" + std::to_string(level) + "(" +
                                d.algebra.name() + ")");

  const int n = d.rank();
  const std::int64_t L = d.form_denominator;
  const std::int64_t k = level + dual_coxeter(d);
  const Labels lambda_rho = add_rho(lambda.labels);
  const std::int64_t top = d.scaled_inner(lambda_rho, lambda_rho);
  // |lambda^ + rho^|^2 - |mu^ + rho^|^2 at depth t, scaled by L
  auto gap = [&](const Labels& mu, int t) {
    const Labels r = add_rho(mu);
    return top - d.scaled_inner(r, r) + 2 * k * t * L;
  };

  const std::vector<Labels> cands = dominant_candidates(d, lambda.labels, top + 2 * k * depth * L);
  const int coxeter = 1 + std::accumulate(d.highest_root.begin(), d.highest_root.end(), 0);

  // nodes (affine height, depth, mu)
  std::vector<std::tuple<int, int, Labels>> nodes;
  for (const Labels& mu : cands) {
    Labels diff(n);
    for (int i = 0; i < n; ++i) diff[i] = lambda.labels[i] - mu[i];
    const int ht = d.height_of_labels(diff);
    for (int t = 0; t <= depth; ++t)
      if ((t == 0 && mu == lambda.labels) || gap(mu, t) > 0) nodes.emplace_back(t * coxeter + ht, t, mu);
  }
  std::sort(nodes.begin(), nodes.end());

  // all roots, positive then negative, in Dynkin labels
  std::vector<Labels> roots = d.positive_root_labels;
  for (const Labels& a : d.positive_root_labels) {
    Labels neg = a;
    for (int& v : neg) v = -v;
    roots.push_back(std::move(neg));
  }

  std::map<std::pair<int, Labels>, BigInt> mult;
  auto lookup = [&](int t, const Labels& x) -> const BigInt* {
    auto it = mult.find({t, to_dominant(d, x).labels});
    return it == mult.end() ? nullptr : &it->second;
  };

  for (const auto& [aff_ht, t, mu] : nodes) {
    if (t == 0 && mu == lambda.labels) {
      mult[{t, mu}] = 1;
      continue;
    }
    BigInt sum = 0;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      const Labels& a = roots[r];
      const bool positive = r < d.positive_root_labels.size();
      // alpha + n delta, n >= 0 for positive alpha and n >= 1 otherwise
      for (int m = positive ? 0 : 1; m <= t; ++m) {
        Labels shifted = mu;
        for (int j = 1;; ++j) {
          if (t - j * m < 0) break;
          for (int i = 0; i < n; ++i) shifted[i] += a[i];
          const BigInt* found = lookup(t - j * m, shifted);
          if (!found || *found == 0) {
            if (m == 0) break;
            continue;
          }
          sum += *found * (d.scaled_inner(shifted, a) + static_cast<std::int64_t>(level) * m * L);
        }
      }
    }
    // imaginary roots m delta with multiplicity rank
    for (int m = 1; m <= t; ++m)
      for (int j = 1; t - j * m >= 0; ++j) {
        auto it = mult.find({t - j * m, mu});
        if (it != mult.end()) sum += it->second * (static_cast<std::int64_t>(n) * level * m * L);
      }
    const std::int64_t g = gap(mu, t);
    if (g <= 0 || (2 * sum) % g != 0) throw std::logic_error("affine Freudenthal recursion is inconsistent");
    mult[{t, mu}] = 2 * sum / g;
  }

  GradedDims out{d.algebra, level, lambda, std::vector<BigInt>(depth + 1, 0)};
  for (const auto& [key, m] : mult) out.dims[key.first] += m * orbit_size(d, key.second);
  if (out.dims[0] != weyl_dimension(d, lambda)) throw std::logic_error("depth-zero piece differs from the Weyl dimension");
  return out;
}

std::vector<BigInt> theta_eta_oracle(int N)
{
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  // integer vectors with even coordinate sum: state (sum of squares, parity)
  std::vector<std::vector<BigInt>> integral(2 * N + 1, std::vector<BigInt>(2, 0));
  integral[0][0] = 1;
  // half-integer vectors u/2, u odd, sum u = 0 mod 4: state (sum of u^2, sum u mod 4)
  std::vector<std::vector<BigInt>> half(8 * N + 1, std::vector<BigInt>(4, 0));
  half[0][0] = 1;
  for (int coord = 0; coord < 8; ++coord) {
    std::vector<std::vector<BigInt>> ni(2 * N + 1, std::vector<BigInt>(2, 0));
    for (int s = 0; s <= 2 * N; ++s)
      for (int p = 0; p < 2; ++p) {
        if (integral[s][p] == 0) continue;
        for (int x = -2 * N; x <= 2 * N; ++x)
          if (s + x * x <= 2 * N) ni[s + x * x][(p + (x & 1)) % 2] += integral[s][p];
      }
    integral = std::move(ni);
    std::vector<std::vector<BigInt>> nh(8 * N + 1, std::vector<BigInt>(4, 0));
    for (int s = 0; s <= 8 * N; ++s)
      for (int p = 0; p < 4; ++p) {
        if (half[s][p] == 0) continue;
        for (int u = -8 * N - 1; u <= 8 * N + 1; u += 2)
          if (s + u * u <= 8 * N) nh[s + u * u][((p + u) % 4 + 4) % 4] += half[s][p];
      }
    half = std::move(nh);
  }
  std::vector<BigInt> theta(N + 1, 0);
  for (int j = 0; j <= N; ++j) {
    theta[j] += integral[2 * j][0];
    theta[j] += half[8 * j][0];
  }
  // 1 / phi(q)^8
  std::vector<BigInt> inv_phi8(N + 1, 0);
  inv_phi8[0] = 1;
  for (int m = 1; m <= N; ++m)
    for (int rep = 0; rep < 8; ++rep)
      for (int j = m; j <= N; ++j) inv_phi8[j] += inv_phi8[j - m];
  std::vector<BigInt> out(N + 1, 0);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j) out[i + j] += theta[i] * inv_phi8[j];
  return out;
}

int branching_offset(const BranchingClaim& c, const Weight& left, const Weight& right)
{
  const Rational off = trace_anomaly(root_datum(c.left), c.left_level, left) +
                       trace_anomaly(root_datum(c.right), c.right_level, right) -
                       trace_anomaly(root_datum(c.ambient), c.ambient_level, c.ambient_weight);
  if (!is_integer(off) || off < 0)
    throw std::logic_error("conformal weight offset " + to_string(off) + " is not a nonnegative integer");
  return static_cast<int>(numerator_of(off));
}

BranchingClaim e8_g2_f4_claim()
{
  BranchingClaim c;
  c.ambient = {'E', 8};
  c.ambient_weight = root_datum(c.ambient).zero();
  c.left = {'G', 2};
  c.right = {'F', 4};
  const RootDatum& g2 = root_datum(c.left);
  const RootDatum& f4 = root_datum(c.right);
  for (const auto& [l, r] : {std::pair{g2.zero(), f4.zero()}, std::pair{g2.fundamental(1), f4.fundamental(4)}})
    c.summands.push_back({l, r, branching_offset(c, l, r)});
  return c;
}

BranchingReport verify_branching(const BranchingClaim& c, int depth)
{
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  BranchingReport rep;
  const std::vector<BigInt> amb =
      graded_dims(root_datum(c.ambient), c.ambient_level, c.ambient_weight, depth).dims;
  std::vector<BigInt> sum(depth + 1, 0);
  for (const BranchingSummand& s : c.summands) {
    try {
      const int expected = branching_offset(c, s.left, s.right);
      if (expected != s.depth_offset)
        rep.problems.push_back("summand (" + s.left.to_string() + "," + s.right.to_string() + ") declares offset " +
                               std::to_string(s.depth_offset) + " but the conformal weights give " +
                               std::to_string(expected));
    } catch (const std::logic_error& e) {
      rep.problems.push_back(e.what());
    }
    if (s.depth_offset < 0) {
      rep.problems.push_back("negative depth offset");
      continue;
    }
    const int room = depth - s.depth_offset;
    if (room < 0) continue;
    const std::vector<BigInt> a = graded_dims(root_datum(c.left), c.left_level, s.left, room).dims;
    const std::vector<BigInt> b = graded_dims(root_datum(c.right), c.right_level, s.right, room).dims;
    for (int i = 0; i <= room; ++i)
      for (int j = 0; i + j <= room; ++j) sum[i + j + s.depth_offset] += a[i] * b[j];
  }
  rep.pass = rep.problems.empty();
  for (int t = 0; t <= depth; ++t) {
    rep.rows.push_back({t, amb[t], sum[t], amb[t] == sum[t]});
    rep.pass = rep.pass && rep.rows.back().pass;
  }
  return rep;
}

}  // namespace sdual
