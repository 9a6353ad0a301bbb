#include "sdual/lie_algebra.hpp"

#include "sdual/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sdual {

namespace {

// Gram matrix (alpha_i, alpha_j) of the simple roots, long roots of length 2.
RationalMatrix simple_root_gram(const LieAlgebraId& id)
{
  const int n = id.rank;
  RationalMatrix b(n, std::vector<Rational>(n, Rational(0)));
  auto bond = [&](int i, int j, Rational v) {  // 1-based
    b[i - 1][j - 1] = v;
    b[j - 1][i - 1] = v;
  };
  const Rational half = make_rational(1, 2);
  switch (id.series) {
  case 'A':
    for (int i = 1; i <= n; ++i) b[i - 1][i - 1] = 2;
    for (int i = 1; i < n; ++i) bond(i, i + 1, -1);
    break;
  case 'B':
    for (int i = 1; i < n; ++i) b[i - 1][i - 1] = 2;
    b[n - 1][n - 1] = 1;
    for (int i = 1; i < n; ++i) bond(i, i + 1, -1);
    break;
  case 'C':
    for (int i = 1; i < n; ++i) b[i - 1][i - 1] = 1;
    b[n - 1][n - 1] = 2;
    for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, -half);
    bond(n - 1, n, -1);
    break;
  case 'D':
    for (int i = 1; i <= n; ++i) b[i - 1][i - 1] = 2;
    for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, -1);
    bond(n - 2, n, -1);
    break;
  case 'E':
    for (int i = 1; i <= n; ++i) b[i - 1][i - 1] = 2;
    bond(1, 3, -1);
    bond(2, 4, -1);
    for (int i = 3; i < n; ++i) bond(i, i + 1, -1);
    break;
  case 'F':
    b[0][0] = 2;
    b[1][1] = 2;
    b[2][2] = 1;
    b[3][3] = 1;
    bond(1, 2, -1);
    bond(2, 3, -1);
    bond(3, 4, -half);
    break;
  case 'G':
    b[0][0] = make_rational(2, 3);
    b[1][1] = 2;
    bond(1, 2, -1);
    break;
  default:
    throw std::invalid_argument("unknown series");
  }
  return b;
}

RationalMatrix invert(RationalMatrix m)
{
  const std::size_t n = m.size();
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Rational determinant(RationalMatrix m)
{
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return det;
}

std::int64_t to_int64(const BigInt& z) { return z.convert_to<std::int64_t>(); }

void enumerate_positive_roots(RootDatum& d)
{
  const int n = d.rank();
  std::set<Labels> roots;
  std::vector<std::vector<Labels>> by_height(1);
  for (int i = 0; i < n; ++i) {
    Labels r(n, 0);
    r[i] = 1;
    roots.insert(r);
    by_height[0].push_back(r);
  }
  std::sort(by_height[0].begin(), by_height[0].end());
  for (std::size_t h = 0; h < by_height.size(); ++h) {
    std::set<Labels> next;
    for (const Labels& beta : by_height[h]) {
      for (int i = 0; i < n; ++i) {
        // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i.
        int p = 0;
        Labels down = beta;
        while (true) {
          down[i] -= 1;
          if (!roots.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * d.cartan[j][i];
        const int q = p - pairing;
        if (q > 0) {
          Labels up = beta;
          up[i] += 1;
          if (!roots.count(up)) next.insert(up);
        }
      }
    }
    if (next.empty()) break;
    by_height.emplace_back(next.begin(), next.end());
    for (const Labels& r : next) roots.insert(r);
  }
  d.positive_roots.clear();
  for (const auto& layer : by_height)
    for (const Labels& r : layer) d.positive_roots.push_back(r);
}

}  // namespace

LieAlgebraId LieAlgebraId::parse(std::string_view text)
{
  if (text.size() < 2) throw std::invalid_argument("malformed algebra name: '" + std::string(text) + "'");
  LieAlgebraId id;
  id.series = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])) || rank > 1000)
      throw std::invalid_argument("malformed algebra name: '" + std::string(text) + "'");
    rank = rank * 10 + (text[i] - '0');
  }
  id.rank = rank;
  if (!is_valid(id)) throw std::invalid_argument("invalid simple type: '" + std::string(text) + "'");
  return id;
}

std::string LieAlgebraId::name() const { return std::string(1, series) + std::to_string(rank); }

bool is_valid(const LieAlgebraId& id)
{
  switch (id.series) {
  case 'A': return id.rank >= 1;
  case 'B': return id.rank >= 2;
  case 'C': return id.rank >= 2;
  case 'D': return id.rank >= 4;
  case 'E': return id.rank >= 6 && id.rank <= 8;
  case 'F': return id.rank == 4;
  case 'G': return id.rank == 2;
  default: return false;
  }
}

std::string labels_to_string(const Labels& labels)
{
  std::string out = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(labels[i]);
  }
  return out + "]";
}

std::string Weight::to_string() const { return labels_to_string(labels); }

Labels parse_labels(std::string_view text)
{
  auto fail = [&] { return std::invalid_argument("malformed weight: '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '[') throw fail();
  ++pos;
  Labels out;
  skip();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip();
      bool neg = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) neg = text[pos++] == '-';
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) throw fail();
      long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos++] - '0');
        if (v > 1000000) throw fail();
      }
      out.push_back(static_cast<int>(neg ? -v : v));
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw fail();
    }
  }
  skip();
  if (pos != text.size()) throw fail();
  return out;
}

std::int64_t RootDatum::scaled_inner(const Labels& x, const Labels& y) const
{
  std::int64_t acc = 0;
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    std::int64_t row = 0;
    for (int j = 0; j < n; ++j) row += form_scaled[i][j] * y[j];
    acc += row * x[i];
  }
  return acc;
}

Rational RootDatum::inner(const Labels& x, const Labels& y) const
{
  return make_rational(scaled_inner(x, y), form_denominator);
}

int RootDatum::level_of(const Labels& x) const
{
  int level = 0;
  for (int i = 0; i < rank(); ++i) level += x[i] * comarks[i];
  return level;
}

Labels RootDatum::root_to_labels(const Labels& c) const
{
  const int n = rank();
  Labels out(n, 0);
  for (int i = 0; i < n; ++i)
    if (c[i] != 0)
      for (int j = 0; j < n; ++j) out[j] += c[i] * cartan[i][j];
  return out;
}

bool RootDatum::in_root_lattice(const Labels& x) const
{
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    std::int64_t c = 0;
    for (int j = 0; j < n; ++j) c += inverse_cartan_t_scaled[i][j] * x[j];
    if (c % cartan_determinant != 0) return false;
  }
  return true;
}

int RootDatum::height_of_labels(const Labels& x) const
{
  const int n = rank();
  std::int64_t h = 0;
  for (int i = 0; i < n; ++i) {
    std::int64_t c = 0;
    for (int j = 0; j < n; ++j) c += inverse_cartan_t_scaled[i][j] * x[j];
    if (c % cartan_determinant != 0) throw std::invalid_argument("weight is not in the root lattice");
    h += c / cartan_determinant;
  }
  return static_cast<int>(h);
}

Weight RootDatum::zero() const { return Weight{algebra, Labels(rank(), 0)}; }

Weight RootDatum::fundamental(int i) const
{
  if (i < 1 || i > rank()) throw std::invalid_argument("fundamental weight index out of range");
  Labels l(rank(), 0);
  l[i - 1] = 1;
  return Weight{algebra, l};
}

Weight RootDatum::weight(Labels labels) const
{
  if (static_cast<int>(labels.size()) != rank())
    throw std::invalid_argument("weight " + labels_to_string(labels) + " has wrong length for " + algebra.name());
  return Weight{algebra, std::move(labels)};
}

RootDatum build_root_datum(const LieAlgebraId& id)
{
  if (!is_valid(id)) throw std::invalid_argument("invalid simple type: " + id.name());
  RootDatum d;
  d.algebra = id;
  const int n = id.rank;
  const RationalMatrix gram = simple_root_gram(id);

  d.cartan.assign(n, std::vector<int>(n, 0));
  d.symmetrizer.resize(n);
  for (int i = 0; i < n; ++i) {
    d.symmetrizer[i] = gram[i][i] / 2;
    for (int j = 0; j < n; ++j) {
      const Rational c = 2 * gram[i][j] / gram[j][j];
      d.cartan[i][j] = static_cast<int>(to_int64(numerator_of(c)));
    }
  }

  // C F = diag(d)  =>  F = C^{-1} diag(d).
  RationalMatrix c_rat(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c_rat[i][j] = d.cartan[i][j];
  const RationalMatrix c_inv = invert(c_rat);
  d.form_matrix.assign(n, std::vector<Rational>(n));
  BigInt lcm = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      d.form_matrix[i][j] = c_inv[i][j] * d.symmetrizer[j];
      lcm = boost::multiprecision::lcm(lcm, denominator_of(d.form_matrix[i][j]));
    }
  d.form_denominator = to_int64(lcm);
  d.form_scaled.assign(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (d.form_matrix[i][j] != d.form_matrix[j][i]) throw std::logic_error("form matrix not symmetric");
      d.form_scaled[i][j] = to_int64(numerator_of(d.form_matrix[i][j] * d.form_denominator));
    }

  RationalMatrix ct(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ct[i][j] = d.cartan[j][i];
  const Rational det = determinant(ct);
  d.cartan_determinant = to_int64(numerator_of(det));
  const RationalMatrix ct_inv = invert(ct);
  d.inverse_cartan_t_scaled.assign(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational v = ct_inv[i][j] * det;
      if (!is_integer(v)) throw std::logic_error("adjugate is not integral");
      d.inverse_cartan_t_scaled[i][j] = to_int64(numerator_of(v));
    }

  enumerate_positive_roots(d);

  d.highest_root = d.positive_roots.back();
  d.weyl_vector.assign(n, 1);
  d.positive_root_labels.reserve(d.positive_roots.size());
  d.positive_coroots.reserve(d.positive_roots.size());
  d.root_heights.reserve(d.positive_roots.size());
  for (const Labels& r : d.positive_roots) {
    d.positive_root_labels.push_back(d.root_to_labels(r));
    // alpha^vee = sum_i c_i d_i / d_alpha alpha_i^vee
    Rational d_alpha = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d_alpha += r[i] * r[j] * gram[i][j];
    d_alpha /= 2;
    Labels co(n);
    for (int i = 0; i < n; ++i) {
      const Rational c = r[i] * d.symmetrizer[i] / d_alpha;
      if (!is_integer(c)) throw std::logic_error("coroot coefficient is not integral");
      co[i] = static_cast<int>(to_int64(numerator_of(c)));
    }
    d.positive_coroots.push_back(co);
    d.root_heights.push_back(std::accumulate(r.begin(), r.end(), 0));
  }
  d.highest_root_labels = d.root_to_labels(d.highest_root);
  d.comarks.resize(n);
  for (int i = 0; i < n; ++i) {
    const Rational c = d.highest_root[i] * d.symmetrizer[i];
    if (!is_integer(c)) throw std::logic_error("comark is not integral");
    d.comarks[i] = static_cast<int>(to_int64(numerator_of(c)));
  }

  if (d.inner(d.highest_root_labels, d.highest_root_labels) != 2)
    throw std::logic_error("highest root is not normalized for " + id.name());
  return d;
}

const RootDatum& root_datum(const LieAlgebraId& id)
{
  static std::mutex mutex;
  static std::map<LieAlgebraId, std::unique_ptr<RootDatum>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, std::make_unique<RootDatum>(build_root_datum(id))).first;
  return *it->second;
}

namespace {

void require_same_algebra(const RootDatum& d, const Weight& w)
{
  if (w.algebra != d.algebra) throw std::invalid_argument("weight belongs to " + w.algebra.name() + ", expected " + d.algebra.name());
  if (static_cast<int>(w.labels.size()) != d.rank()) throw std::invalid_argument("weight has wrong number of labels");
}

void require_dominant(const RootDatum& d, const Weight& w)
{
  require_same_algebra(d, w);
  if (!is_dominant(w.labels)) throw std::invalid_argument("weight " + w.to_string() + " is not dominant");
}

Labels plus_rho(Labels x)
{
  for (int& v : x) v += 1;
  return x;
}

}  // namespace

Rational inner_product(const RootDatum& d, const Weight& x, const Weight& y)
{
  require_same_algebra(d, x);
  require_same_algebra(d, y);
  return d.inner(x.labels, y.labels);
}

int dual_coxeter(const RootDatum& d)
{
  const Rational v = d.inner(d.weyl_vector, d.highest_root_labels) + 1;
  return static_cast<int>(to_int64(numerator_of(v)));
}

bool is_dominant(const Labels& x)
{
  return std::all_of(x.begin(), x.end(), [](int v) { return v >= 0; });
}

BigInt weyl_dimension(const RootDatum& d, const Weight& lambda)
{
  require_dominant(d, lambda);
  BigInt num = 1;
  BigInt den = 1;
  for (const Labels& co : d.positive_coroots) {
    std::int64_t a = 0;
    std::int64_t b = 0;
    for (int i = 0; i < d.rank(); ++i) {
      a += static_cast<std::int64_t>(lambda.labels[i] + 1) * co[i];
      b += co[i];
    }
    num *= a;
    den *= b;
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not integral");
  return num / den;
}

std::int64_t WeightSystem::total() const
{
  std::int64_t t = 0;
  for (const auto& [w, m] : multiplicities) t += m;
  return t;
}

std::map<Labels, std::int64_t> dominant_multiplicities(const RootDatum& d, const Labels& lambda)
{
  if (!is_dominant(lambda)) throw std::invalid_argument("weight " + labels_to_string(lambda) + " is not dominant");
  const int n = d.rank();

  std::set<Labels> found{lambda};
  std::deque<Labels> queue{lambda};
  while (!queue.empty()) {
    const Labels mu = queue.front();
    queue.pop_front();
    for (std::size_t r = 0; r < d.positive_roots.size(); ++r) {
      const Labels& co = d.positive_coroots[r];
      const Labels& a = d.positive_root_labels[r];
      int pairing = 0;
      for (int i = 0; i < n; ++i) pairing += mu[i] * co[i];
      Labels nu = mu;
      for (int k = 1; k <= pairing; ++k) {
        for (int i = 0; i < n; ++i) nu[i] -= a[i];
        Labels dom = to_dominant(d, nu).labels;
        if (found.insert(dom).second) queue.push_back(std::move(dom));
      }
    }
  }

  std::vector<std::pair<int, Labels>> order;
  order.reserve(found.size());
  for (const Labels& mu : found) {
    Labels diff(n);
    for (int i = 0; i < n; ++i) diff[i] = lambda[i] - mu[i];
    order.emplace_back(d.height_of_labels(diff), mu);
  }
  std::sort(order.begin(), order.end());

  std::map<Labels, std::int64_t> mult;
  const Labels lambda_rho = plus_rho(lambda);
  const std::int64_t top = d.scaled_inner(lambda_rho, lambda_rho);
  for (const auto& [height, mu] : order) {
    if (height == 0) {
      mult[mu] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (const Labels& a : d.positive_root_labels) {
      Labels shifted = mu;
      while (true) {
        for (int i = 0; i < n; ++i) shifted[i] += a[i];
        auto it = mult.find(to_dominant(d, shifted).labels);
        if (it == mult.end() || it->second == 0) break;
        sum += d.scaled_inner(shifted, a) * it->second;
      }
    }
    const Labels mu_rho = plus_rho(mu);
    const std::int64_t gap = top - d.scaled_inner(mu_rho, mu_rho);
    if (gap <= 0 || (2 * sum) % gap != 0) throw std::logic_error("Freudenthal recursion is inconsistent");
    mult[mu] = 2 * sum / gap;
  }
  return mult;
}

WeightSystem freudenthal_weights(const RootDatum& d, const Weight& lambda)
{
  require_dominant(d, lambda);
  WeightSystem ws{lambda, {}};
  for (const auto& [mu, m] : dominant_multiplicities(d, lambda.labels))
    for (Labels& w : weyl_orbit(d, mu)) ws.multiplicities.emplace(std::move(w), m);
  return ws;
}

std::map<Weight, std::int64_t> tensor_decompose(const RootDatum& d, const Weight& lambda, const Weight& mu)
{
  require_dominant(d, lambda);
  require_dominant(d, mu);
  const int n = d.rank();
  std::map<Labels, std::int64_t> acc;
  for (const auto& [dom, m] : dominant_multiplicities(d, mu.labels)) {
    for (const Labels& nu : weyl_orbit(d, dom)) {
      Labels x(n);
      for (int i = 0; i < n; ++i) x[i] = lambda.labels[i] + nu[i] + 1;
      ShiftedReflection r = reflect_shifted_to_dominant(d, std::move(x));
      if (r.sign == 0) continue;
      for (int& v : r.labels) v -= 1;
      acc[r.labels] += r.sign * m;
    }
  }
  std::map<Weight, std::int64_t> out;
  for (const auto& [w, m] : acc) {
    if (m < 0) throw std::logic_error("negative Racah-Speiser multiplicity");
    if (m > 0) out.emplace(Weight{d.algebra, w}, m);
  }
  return out;
}

std::vector<Weight> level_weights(const RootDatum& d, int ell)
{
  if (ell < 0) throw std::invalid_argument("level must be nonnegative");
  const int n = d.rank();
  std::vector<Labels> all;
  Labels cur(n, 0);
  auto rec = [&](auto&& self, int i, int budget) -> void {
    if (i == n) {
      all.push_back(cur);
      return;
    }
    for (int v = 0; v * d.comarks[i] <= budget; ++v) {
      cur[i] = v;
      self(self, i + 1, budget - v * d.comarks[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, ell);
  std::sort(all.begin(), all.end(), [&](const Labels& a, const Labels& b) {
    const int la = d.level_of(a);
    const int lb = d.level_of(b);
    return la != lb ? la < lb : a < b;
  });
  std::vector<Weight> out;
  out.reserve(all.size());
  for (Labels& l : all) out.push_back(Weight{d.algebra, std::move(l)});
  return out;
}

Weight dual_weight(const RootDatum& d, const Weight& lambda)
{
  require_same_algebra(d, lambda);
  Labels neg = lambda.labels;
  for (int& v : neg) v = -v;
  return Weight{d.algebra, to_dominant(d, std::move(neg)).labels};
}

}  // namespace sdual
