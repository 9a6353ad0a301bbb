#include "sdual/conformal_embedding.hpp"

#include <cctype>
#include <stdexcept>

namespace sdual {

Rational conformal_anomaly(const RootDatum& d, int level)
{
  if (level < 0) throw std::invalid_argument("level must be nonnegative");
  return make_rational(static_cast<std::int64_t>(level) * d.dimension(), dual_coxeter(d) + level);
}

Rational trace_anomaly(const RootDatum& d, int level, const Weight& lambda)
{
  if (lambda.algebra != d.algebra || static_cast<int>(lambda.labels.size()) != d.rank())
    throw std::invalid_argument("weight does not belong to " + d.algebra.name());
  if (!is_dominant(lambda.labels)) throw std::invalid_argument("weight " + lambda.to_string() + " is not dominant");
  if (d.level_of(lambda.labels) > level)
    throw std::invalid_argument("weight " + lambda.to_string() + " lies above level " + std::to_string(level));
  Labels shifted = lambda.labels;
  for (int i = 0; i < d.rank(); ++i) shifted[i] += 2;
  return d.inner(lambda.labels, shifted) / (2 * (dual_coxeter(d) + level));
}

Rational rep_dynkin_index(const RootDatum& d, const Weight& lambda)
{
  const BigInt dim = weyl_dimension(d, lambda);
  Labels shifted = lambda.labels;
  for (int& v : shifted) v += 2;
  return Rational(dim) * d.inner(lambda.labels, shifted) / (2 * d.dimension());
}

Rational rep_dynkin_index_by_weights(const RootDatum& d, const Weight& lambda)
{
  const WeightSystem ws = freudenthal_weights(d, lambda);
  Rational acc = 0;
  for (const auto& [mu, m] : ws.multiplicities) acc += Rational(m) * d.inner(mu, mu);
  return acc / (2 * d.rank());
}

IndexCheckReport embedding_index_check(const EmbeddingData& e)
{
  IndexCheckReport rep;
  const RootDatum& amb = root_datum(e.ambient);
  rep.ambient_dimension = amb.dimension();
  if (e.adjoint_branching.empty()) {
    rep.note = "no adjoint branching data";
    return rep;
  }
  const std::size_t nf = e.factors.size();
  std::vector<std::vector<BigInt>> dims;
  std::vector<std::vector<Rational>> idx;
  for (const BranchingComponent& c : e.adjoint_branching) {
    if (c.weights.size() != nf) throw std::invalid_argument("branching component has wrong number of factors");
    if (c.multiplicity <= 0) throw std::invalid_argument("branching multiplicity must be positive");
    std::vector<BigInt> dv;
    std::vector<Rational> iv;
    for (std::size_t i = 0; i < nf; ++i) {
      const RootDatum& f = root_datum(e.factors[i].algebra);
      dv.push_back(weyl_dimension(f, c.weights[i]));
      iv.push_back(rep_dynkin_index(f, c.weights[i]));
    }
    BigInt prod = c.multiplicity;
    for (const BigInt& x : dv) prod *= x;
    rep.branching_dimension += prod;
    dims.push_back(std::move(dv));
    idx.push_back(std::move(iv));
  }
  rep.dimension_ok = rep.branching_dimension == rep.ambient_dimension;
  const int hv = dual_coxeter(amb);
  rep.pass = rep.dimension_ok;
  for (std::size_t i = 0; i < nf; ++i) {
    IndexCheckRow row;
    row.factor = e.factors[i].label;
    for (std::size_t c = 0; c < e.adjoint_branching.size(); ++c) {
      Rational term = idx[c][i] * e.adjoint_branching[c].multiplicity;
      for (std::size_t j = 0; j < nf; ++j)
        if (j != i) term *= Rational(dims[c][j]);
      row.branching_sum += term;
    }
    row.expected = Rational(hv) * e.factors[i].dynkin_index;
    row.pass = row.branching_sum == row.expected;
    rep.pass = rep.pass && row.pass;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

AnomalyReport anomaly_report(const EmbeddingData& e)
{
  AnomalyReport r;
  for (const EmbeddingFactor& f : e.factors) {
    r.factor_anomalies.push_back(conformal_anomaly(root_datum(f.algebra), f.dynkin_index));
    r.factor_sum += r.factor_anomalies.back();
  }
  r.ambient_anomaly = conformal_anomaly(root_datum(e.ambient), 1);
  r.conformal = r.factor_sum == r.ambient_anomaly;
  return r;
}

bool is_conformal(const EmbeddingData& e) { return anomaly_report(e).conformal; }

RankReport rank_deficiency_check(const EmbeddingData& e)
{
  RankReport r;
  for (const EmbeddingFactor& f : e.factors) r.factor_rank_sum += f.algebra.rank;
  r.ambient_rank = e.ambient.rank;
  r.deficiency = r.ambient_rank - r.factor_rank_sum;
  r.strictly_smaller = r.deficiency > 0;
  return r;
}

namespace {

Weight w(char series, int rank, Labels l) { return Weight{LieAlgebraId{series, rank}, std::move(l)}; }

Labels unit(int n, int i, int v = 1)  // 1-based
{
  Labels l(n, 0);
  l[i - 1] = v;
  return l;
}

// Named representations of the classical algebras, by the algebra the label maps to.
struct Classical {
  std::string label;
  LieAlgebraId id;
  int index_scale = 1;  // Dynkin index of the realization relative to the named normalization

  Weight trivial() const { return Weight{id, Labels(id.rank, 0)}; }
  Weight adjoint() const { return Weight{id, root_datum(id).highest_root_labels}; }
};

Classical sl_algebra(int r)
{
  if (r < 2) throw std::invalid_argument("sl(" + std::to_string(r) + ") is not simple");
  return {"sl(" + std::to_string(r) + ")", {'A', r - 1}, 1};
}

Classical so_algebra(int p)
{
  if (p == 3) return {"so(3)", {'A', 1}, 2};
  if (p < 3 || p == 4)
    throw std::invalid_argument("so(" + std::to_string(p) + ") is not simple; degenerate ranks are rejected");
  if (p == 6) return {"so(6)", {'A', 3}, 1};
  if (p % 2 == 1) return {"so(" + std::to_string(p) + ")", {'B', (p - 1) / 2}, 1};
  return {"so(" + std::to_string(p) + ")", {'D', p / 2}, 1};
}

Classical sp_algebra(int r)
{
  if (r < 1) throw std::invalid_argument("sp(" + std::to_string(2 * r) + ") is not simple");
  if (r == 1) return {"sp(2)", {'A', 1}, 1};
  return {"sp(" + std::to_string(2 * r) + ")", {'C', r}, 1};
}

// Vector representation V of so(p) and the traceless part of S^2 V.
Weight so_vector(const Classical& c)
{
  const LieAlgebraId& id = c.id;
  if (c.label == "so(3)") return w('A', 1, {2});
  if (c.label == "so(6)") return w('A', 3, {0, 1, 0});
  return Weight{id, unit(id.rank, 1)};
}

Weight so_sym_traceless(const Classical& c)
{
  Weight v = so_vector(c);
  for (int& x : v.labels) x *= 2;
  return v;
}

// Traceless part of Lambda^2 V of sp(2r); absent for r = 1.
Weight sp_wedge_traceless(const Classical& c) { return Weight{c.id, unit(c.id.rank, 2)}; }

EmbeddingData two_factor(std::string name, const Classical& a, int la, const Classical& b, int lb, const Classical& amb)
{
  EmbeddingData e;
  e.name = std::move(name);
  e.factors = {{a.label, a.id, la * a.index_scale}, {b.label, b.id, lb * b.index_scale}};
  e.ambient_label = amb.label;
  e.ambient = amb.id;
  return e;
}

}  // namespace

EmbeddingData g2_f4_in_e8()
{
  EmbeddingData e;
  e.name = "g2xf4-in-e8";
  e.factors = {{"g2", {'G', 2}, 1}, {"f4", {'F', 4}, 1}};
  e.ambient_label = "e8";
  e.ambient = {'E', 8};
  e.adjoint_branching = {
      {{w('G', 2, {0, 1}), w('F', 4, {0, 0, 0, 0})}, 1},
      {{w('G', 2, {0, 0}), w('F', 4, {1, 0, 0, 0})}, 1},
      {{w('G', 2, {1, 0}), w('F', 4, {0, 0, 0, 1})}, 1},
  };
  return e;
}

EmbeddingData sl_sl_in_sl(int r, int s)
{
  const Classical a = sl_algebra(r), b = sl_algebra(s), amb = sl_algebra(r * s);
  EmbeddingData e = two_factor("sl" + std::to_string(r) + "xsl" + std::to_string(s) + "-in-sl" + std::to_string(r * s), a, s,
                               b, r, amb);
  e.adjoint_branching = {
      {{a.adjoint(), b.trivial()}, 1},
      {{a.trivial(), b.adjoint()}, 1},
      {{a.adjoint(), b.adjoint()}, 1},
  };
  return e;
}

EmbeddingData so_so_in_so(int p, int q)
{
  const Classical a = so_algebra(p), b = so_algebra(q), amb = so_algebra(p * q);
  EmbeddingData e = two_factor("so" + std::to_string(p) + "xso" + std::to_string(q) + "-in-so" + std::to_string(p * q), a, q,
                               b, p, amb);
  // Lambda^2(V (x) W) = Lambda^2 V (x) S^2 W + S^2 V (x) Lambda^2 W
  e.adjoint_branching = {
      {{a.adjoint(), b.trivial()}, 1},
      {{a.adjoint(), so_sym_traceless(b)}, 1},
      {{a.trivial(), b.adjoint()}, 1},
      {{so_sym_traceless(a), b.adjoint()}, 1},
  };
  return e;
}

EmbeddingData sp_sp_in_so(int r, int s)
{
  if (r == 1 && s == 1) throw std::invalid_argument("sp(2)+sp(2) in so(4) is degenerate; so(4) is not simple");
  const Classical a = sp_algebra(r), b = sp_algebra(s), amb = so_algebra(4 * r * s);
  EmbeddingData e = two_factor("sp" + std::to_string(2 * r) + "xsp" + std::to_string(2 * s) + "-in-so" +
                                   std::to_string(4 * r * s),
                               a, s, b, r, amb);
  e.adjoint_branching = {{{a.trivial(), b.adjoint()}, 1}, {{a.adjoint(), b.trivial()}, 1}};
  if (r > 1) e.adjoint_branching.push_back({{sp_wedge_traceless(a), b.adjoint()}, 1});
  if (s > 1) e.adjoint_branching.push_back({{a.adjoint(), sp_wedge_traceless(b)}, 1});
  return e;
}

EmbeddingData self_embedding(const LieAlgebraId& id, int index)
{
  if (!is_valid(id)) throw std::invalid_argument("invalid algebra " + id.name());
  if (index < 1) throw std::invalid_argument("Dynkin index must be positive");
  EmbeddingData e;
  e.name = id.name() + "-in-" + id.name() + (index == 1 ? "" : "@" + std::to_string(index));
  e.factors = {{id.name(), id, index}};
  e.ambient_label = id.name();
  e.ambient = id;
  e.adjoint_branching = {{{Weight{id, root_datum(id).highest_root_labels}}, 1}};
  return e;
}

std::vector<EmbeddingData> known_embeddings()
{
  std::vector<EmbeddingData> out{g2_f4_in_e8()};
  for (int r : {2, 3})
    for (int s : {2, 3, 4}) out.push_back(sl_sl_in_sl(r, s));
  const int so_ranks[] = {3, 5, 6, 7, 8};
  for (int p : so_ranks)
    for (int q : so_ranks)
      if (p <= q) out.push_back(so_so_in_so(p, q));
  for (int r = 1; r <= 4; ++r)
    for (int s = r; s <= 4; ++s)
      if (r * s > 1) out.push_back(sp_sp_in_so(r, s));
  return out;
}

namespace {

bool parse_pair(const std::string& s, const std::string& a, const std::string& b, const std::string& c, int& x, int& y,
                int& z)
{
  // a<x> "x" b<y> "-in-" c<z>
  std::size_t pos = 0;
  auto take = [&](const std::string& lit) {
    if (s.compare(pos, lit.size(), lit) != 0) return false;
    pos += lit.size();
    return true;
  };
  auto num = [&](int& out) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || pos - start > 4) return false;
    out = std::stoi(s.substr(start, pos - start));
    return true;
  };
  return take(a) && num(x) && take("x") && take(b) && num(y) && take("-in-") && take(c) && num(z) && pos == s.size();
}

}  // namespace

EmbeddingData embedding_by_name(const std::string& name)
{
  if (name == "g2xf4-in-e8") return g2_f4_in_e8();
  int x = 0, y = 0, z = 0;
  auto check = [&](int expected) {
    if (z != expected) throw std::invalid_argument("embedding '" + name + "': ambient should have size " + std::to_string(expected));
  };
  if (parse_pair(name, "sl", "sl", "sl", x, y, z)) {
    check(x * y);
    return sl_sl_in_sl(x, y);
  }
  if (parse_pair(name, "so", "so", "so", x, y, z)) {
    check(x * y);
    return so_so_in_so(x, y);
  }
  if (parse_pair(name, "sp", "sp", "so", x, y, z)) {
    if (x % 2 || y % 2) throw std::invalid_argument("sp(n) requires even n");
    check(x * y);
    return sp_sp_in_so(x / 2, y / 2);
  }
  const auto in = name.find("-in-");
  if (in != std::string::npos) {
    std::string rest = name.substr(in + 4);
    int index = 1;
    if (auto at = rest.find('@'); at != std::string::npos) {
      try {
        index = std::stoi(rest.substr(at + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed index in embedding name '" + name + "'");
      }
      rest = rest.substr(0, at);
    }
    const LieAlgebraId a = LieAlgebraId::parse(name.substr(0, in));
    const LieAlgebraId b = LieAlgebraId::parse(rest);
    if (a == b) return self_embedding(a, index);
  }
  throw std::invalid_argument("unknown embedding '" + name + "'");
}

}  // namespace sdual
