#include "doctest.h"

#include "sdual/lie_algebra.hpp"
#include "sdual/weyl.hpp"

#include <map>
#include <random>
#include <set>

using namespace sdual;

namespace {

const RootDatum& rd(const char* name) { return root_datum(LieAlgebraId::parse(name)); }

// Root system as the closure of the simple roots under simple reflections,
// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i in simple-root coordinates.
std::set<Labels> roots_by_reflection(const RootDatum& d)
{
  const int n = d.rank();
  std::set<Labels> seen;
  std::vector<Labels> stack;
  for (int i = 0; i < n; ++i) {
    Labels r(n, 0);
    r[i] = 1;
    seen.insert(r);
    stack.push_back(r);
  }
  while (!stack.empty()) {
    Labels beta = stack.back();
    stack.pop_back();
    for (int i = 0; i < n; ++i) {
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += beta[j] * d.cartan[j][i];
      Labels img = beta;
      img[i] -= pairing;
      if (seen.insert(img).second) stack.push_back(img);
    }
  }
  return seen;
}

// Brute-force character of V_lambda times V_mu, peeled into irreducibles from the top.
std::map<Labels, std::int64_t> decompose_by_characters(const RootDatum& d, const Labels& lambda, const Labels& mu)
{
  const auto a = freudenthal_weights(d, d.weight(lambda)).multiplicities;
  const auto b = freudenthal_weights(d, d.weight(mu)).multiplicities;
  std::map<Labels, std::int64_t> product;
  for (const auto& [x, mx] : a)
    for (const auto& [y, my] : b) {
      Labels s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      product[s] += mx * my;
    }
  std::map<Labels, std::int64_t> out;
  while (true) {
    // A highest remaining weight: dominant, nonzero, maximal height above zero.
    const Labels* best = nullptr;
    int best_height = 0;
    for (const auto& [w, m] : product) {
      if (m == 0 || !is_dominant(w)) continue;
      Labels diff(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) diff[i] = w[i] - lambda[i] - mu[i];
      const int h = d.height_of_labels(diff);
      if (!best || h > best_height) {
        best = &w;
        best_height = h;
      }
    }
    if (!best) break;
    const Labels top = *best;
    const std::int64_t m = product[top];
    out[top] += m;
    for (const auto& [w, mw] : freudenthal_weights(d, d.weight(top)).multiplicities) product[w] -= m * mw;
  }
  for (const auto& [w, m] : product) CHECK(m == 0);
  return out;
}

}  // namespace

TEST_CASE("algebra ids parse and validate")
{
  CHECK(LieAlgebraId::parse("G2").name() == "G2");
  CHECK(LieAlgebraId::parse("e8") == LieAlgebraId{'E', 8});
  CHECK_THROWS_AS(LieAlgebraId::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebraId::parse("F3"), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebraId::parse("D3"), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebraId::parse("X2"), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebraId::parse("G"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum(LieAlgebraId{'G', 3}), std::invalid_argument);
}

TEST_CASE("positive roots agree with reflection closure")
{
  const std::map<std::string, std::pair<int, int>> expected{
      {"G2", {6, 14}}, {"F4", {24, 52}}, {"E8", {120, 248}}};
  for (const auto& [name, counts] : expected) {
    const RootDatum& d = rd(name.c_str());
    const auto all = roots_by_reflection(d);
    int positive = 0;
    for (const Labels& r : all) positive += r[0] >= 0 && std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
    CHECK(static_cast<int>(all.size()) == 2 * positive);
    CHECK(positive == counts.first);
    CHECK(static_cast<int>(d.positive_roots.size()) == counts.first);
    CHECK(d.dimension() == counts.second);
  }
  for (const char* name : {"A1", "A4", "B3", "C3", "D4", "D5", "E6", "E7"}) {
    const RootDatum& d = rd(name);
    CHECK(2 * d.positive_roots.size() == roots_by_reflection(d).size());
  }
}

TEST_CASE("root order is height then lexicographic")
{
  const RootDatum& d = rd("F4");
  for (std::size_t i = 1; i < d.positive_roots.size(); ++i) {
    const int h0 = d.root_heights[i - 1];
    const int h1 = d.root_heights[i];
    CHECK((h0 < h1 || (h0 == h1 && d.positive_roots[i - 1] < d.positive_roots[i])));
  }
  CHECK(d.highest_root == Labels{2, 3, 4, 2});
  CHECK(rd("G2").highest_root == Labels{3, 2});
  CHECK(rd("E8").highest_root == Labels{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("root datum invariants")
{
  for (const char* name : {"A1", "A3", "B2", "B4", "C3", "C4", "D4", "D6", "E6", "E7", "E8", "F4", "G2"}) {
    const RootDatum& d = rd(name);
    INFO(name);
    CHECK(d.inner(d.highest_root_labels, d.highest_root_labels) == 2);
    // (rho, alpha_i^vee) = 1 is the statement that rho has Dynkin labels all one.
    for (int i = 0; i < d.rank(); ++i) {
      CHECK(d.weyl_vector[i] == 1);
      Labels e(d.rank(), 0);
      e[i] = 1;
      const Labels alpha_i = d.root_to_labels(e);
      CHECK(2 * d.inner(d.weyl_vector, alpha_i) / d.inner(alpha_i, alpha_i) == 1);
    }
    int comark_sum = 0;
    for (int c : d.comarks) comark_sum += c;
    CHECK(dual_coxeter(d) == 1 + comark_sum);
    CHECK(weyl_dimension(d, d.weight(d.highest_root_labels)) == d.dimension());
  }
}

TEST_CASE("inner products and dual Coxeter numbers")
{
  const RootDatum& g2 = rd("G2");
  const RootDatum& f4 = rd("F4");
  const RootDatum& e8 = rd("E8");
  CHECK(e8.inner(e8.highest_root_labels, e8.highest_root_labels) == 2);
  // (lambda, lambda + 2 rho)
  auto casimir = [](const RootDatum& d, const Weight& w) {
    Labels shifted = w.labels;
    for (int& v : shifted) v += 2;
    return inner_product(d, w, d.weight(shifted));
  };
  CHECK(casimir(g2, g2.fundamental(1)) == 4);
  CHECK(casimir(f4, f4.fundamental(4)) == 12);
  CHECK(dual_coxeter(g2) == 4);
  CHECK(dual_coxeter(f4) == 9);
  CHECK(dual_coxeter(e8) == 30);
  CHECK_THROWS_AS(inner_product(g2, g2.fundamental(1), f4.fundamental(1)), std::invalid_argument);
}

TEST_CASE("Weyl dimensions")
{
  const RootDatum& g2 = rd("G2");
  const RootDatum& f4 = rd("F4");
  CHECK(weyl_dimension(g2, g2.fundamental(1)) == 7);
  CHECK(weyl_dimension(g2, g2.fundamental(2)) == 14);
  CHECK(weyl_dimension(f4, f4.fundamental(4)) == 26);
  CHECK(weyl_dimension(f4, f4.fundamental(1)) == 52);
  CHECK(weyl_dimension(rd("E8"), rd("E8").fundamental(1)) == 3875);
  for (const char* name : {"G2", "F4", "E8", "A2"}) CHECK(weyl_dimension(rd(name), rd(name).zero()) == 1);
  CHECK_THROWS_AS(weyl_dimension(g2, g2.weight({-1, 0})), std::invalid_argument);
}

TEST_CASE("Freudenthal weight systems")
{
  const RootDatum& g2 = rd("G2");
  const auto ws = freudenthal_weights(g2, g2.fundamental(1));
  CHECK(ws.multiplicities.size() == 7);
  CHECK(ws.multiplicities.at({0, 0}) == 1);
  // The nonzero weights are the W-orbit of omega_1.
  CHECK(weyl_orbit(g2, {1, 0}).size() == 6);
  for (const auto& [w, m] : ws.multiplicities) CHECK(m == 1);

  const RootDatum& f4 = rd("F4");
  const auto ws4 = freudenthal_weights(f4, f4.fundamental(4));
  CHECK(ws4.multiplicities.at({0, 0, 0, 0}) == 2);
  CHECK(weyl_orbit(f4, {0, 0, 0, 1}).size() == 24);
  CHECK(ws4.total() == 26);

  const auto trivial = freudenthal_weights(g2, g2.zero());
  CHECK(trivial.multiplicities.size() == 1);
  CHECK(trivial.multiplicities.at({0, 0}) == 1);

  // Adjoint: zero weight has multiplicity equal to the rank.
  const RootDatum& e8 = rd("E8");
  const auto adj = dominant_multiplicities(e8, e8.highest_root_labels);
  CHECK(adj.at(Labels(8, 0)) == 8);
}

TEST_CASE("Weyl group orders and orbit sizes")
{
  CHECK(weyl_group_order(rd("G2")) == 12);
  CHECK(weyl_group_order(rd("F4")) == 1152);
  CHECK(weyl_group_order(rd("E8")) == BigInt(696729600));
  CHECK(weyl_group_order(rd("A4")) == 120);
  for (const char* name : {"G2", "F4", "B3", "A3"}) {
    const RootDatum& d = rd(name);
    CHECK(weyl_group_elements(d, 100000).size() == weyl_group_order(d));
    for (const Weight& w : level_weights(d, 3)) CHECK(BigInt(weyl_orbit(d, w.labels).size()) == orbit_size(d, w.labels));
  }
  CHECK_THROWS_AS(weyl_group_elements(rd("E8"), 100000), std::invalid_argument);
}

TEST_CASE("Freudenthal total equals Weyl dimension on random weights")
{
  std::mt19937 rng(20240521);
  const std::vector<const char*> names{"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6"};
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 120; ++trial) {
    const RootDatum& d = rd(names[rng() % names.size()]);
    Labels l(d.rank());
    for (int& v : l) v = static_cast<int>(rng() % 3);
    const BigInt dim = weyl_dimension(d, d.weight(l));
    if (dim > 1000) continue;
    ++checked;
    const auto ws = freudenthal_weights(d, d.weight(l));
    CHECK(BigInt(ws.total()) == dim);
    // Orbit multiplicities are constant: every reflection of a weight has the same multiplicity.
    for (const auto& [w, m] : ws.multiplicities)
      for (int i = 0; i < d.rank(); ++i) {
        Labels r = w;
        reflect_in_place(d, r, i);
        CHECK(ws.multiplicities.at(r) == m);
      }
  }
  CHECK(checked >= 60);
}

TEST_CASE("tensor products")
{
  const RootDatum& g2 = rd("G2");
  const auto seven_sq = tensor_decompose(g2, g2.fundamental(1), g2.fundamental(1));
  const auto oracle = decompose_by_characters(g2, {1, 0}, {1, 0});
  std::map<Labels, std::int64_t> got;
  for (const auto& [w, m] : seven_sq) got[w.labels] = m;
  CHECK(got == oracle);
  CHECK(got == std::map<Labels, std::int64_t>{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{2, 0}, 1}});

  const auto with_trivial = tensor_decompose(g2, g2.weight({2, 1}), g2.zero());
  CHECK(with_trivial.size() == 1);
  CHECK(with_trivial.at(g2.weight({2, 1})) == 1);

  const RootDatum& f4 = rd("F4");
  BigInt total = 0;
  for (const auto& [w, m] : tensor_decompose(f4, f4.fundamental(4), f4.fundamental(4))) total += m * weyl_dimension(f4, w);
  CHECK(total == 676);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const RootDatum& d = trial % 2 ? g2 : rd("B2");
    Labels a{static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)};
    Labels b{static_cast<int>(rng() % 2), static_cast<int>(rng() % 3)};
    const auto ab = tensor_decompose(d, d.weight(a), d.weight(b));
    const auto ba = tensor_decompose(d, d.weight(b), d.weight(a));
    CHECK(ab == ba);
    BigInt sum = 0;
    for (const auto& [w, m] : ab) sum += m * weyl_dimension(d, w);
    CHECK(sum == weyl_dimension(d, d.weight(a)) * weyl_dimension(d, d.weight(b)));
    std::map<Labels, std::int64_t> plain;
    for (const auto& [w, m] : ab) plain[w.labels] = m;
    CHECK(plain == decompose_by_characters(d, a, b));
  }
}

TEST_CASE("level weights")
{
  auto labels_of = [](const std::vector<Weight>& ws) {
    std::vector<Labels> out;
    for (const auto& w : ws) out.push_back(w.labels);
    return out;
  };
  CHECK(labels_of(level_weights(rd("G2"), 1)) == std::vector<Labels>{{0, 0}, {1, 0}});
  CHECK(labels_of(level_weights(rd("F4"), 1)) == std::vector<Labels>{{0, 0, 0, 0}, {0, 0, 0, 1}});
  CHECK(labels_of(level_weights(rd("E8"), 1)) == std::vector<Labels>{Labels(8, 0)});
  CHECK(level_weights(rd("F4"), 3).size() == 9);
  CHECK_THROWS_AS(level_weights(rd("G2"), -1), std::invalid_argument);
  for (const char* name : {"G2", "F4", "A2", "C3"})
    for (int l = 0; l < 4; ++l) {
      const auto lo = level_weights(rd(name), l);
      const auto hi = level_weights(rd(name), l + 1);
      for (const auto& w : lo) CHECK(std::find(hi.begin(), hi.end(), w) != hi.end());
    }
}

TEST_CASE("dual weights")
{
  const RootDatum& a2 = rd("A2");
  CHECK(dual_weight(a2, a2.weight({1, 0})).labels == Labels{0, 1});
  for (const char* name : {"G2", "F4", "E8"})
    for (const Weight& w : level_weights(rd(name), 2)) CHECK(dual_weight(rd(name), w) == w);
}

TEST_CASE("label parsing")
{
  CHECK(parse_labels("[1,0]") == Labels{1, 0});
  CHECK(parse_labels(" [ 0 , 0 , 0 , 1 ] ") == Labels{0, 0, 0, 1});
  CHECK(parse_labels("[]").empty());
  CHECK_THROWS_AS(parse_labels("[1,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_labels("1,0"), std::invalid_argument);
  CHECK_THROWS_AS(rd("G2").weight({1, 0, 0}), std::invalid_argument);
}
