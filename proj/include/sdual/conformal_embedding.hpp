#pragma once

#include "sdual/lie_algebra.hpp"

#include <string>
#include <vector>

namespace sdual {

/// c(g, l) = l dim g / (h^vee + l).
Rational conformal_anomaly(const RootDatum& d, int level);

/// Delta_lambda(g, l) = (lambda, lambda + 2 rho) / (2 (h^vee + l)). lambda must lie in P_l.
Rational trace_anomaly(const RootDatum& d, int level, const Weight& lambda);

/// Dynkin index of an irreducible representation, dim V (lambda, lambda + 2 rho) / (2 dim g).
/// Normalized so that the adjoint has index h^vee.
Rational rep_dynkin_index(const RootDatum& d, const Weight& lambda);

/// Same quantity from the weight system: sum_mu mult(mu) (mu, mu) / (2 rank).
Rational rep_dynkin_index_by_weights(const RootDatum& d, const Weight& lambda);

struct EmbeddingFactor {
  std::string label;  // "so(5)", "g2"
  LieAlgebraId algebra;
  int dynkin_index = 1;
};

/// One summand of the ambient adjoint restricted to the product of factors:
/// an irreducible of each factor (in factor order) with a multiplicity.
struct BranchingComponent {
  std::vector<Weight> weights;
  int multiplicity = 1;
};

struct EmbeddingData {
  std::string name;
  std::vector<EmbeddingFactor> factors;
  std::string ambient_label;
  LieAlgebraId ambient;
  std::vector<BranchingComponent> adjoint_branching;  // may be empty when not provided
};

struct IndexCheckRow {
  std::string factor;
  Rational branching_sum;  // sum over components of (other dims) * T_i(component)
  Rational expected;       // h^vee(ambient) * l_i
  bool pass = false;
};

struct IndexCheckReport {
  BigInt branching_dimension = 0;
  BigInt ambient_dimension = 0;
  bool dimension_ok = false;
  std::vector<IndexCheckRow> rows;
  bool pass = false;
  std::string note;  // set when no branching data is available
};

IndexCheckReport embedding_index_check(const EmbeddingData& e);

struct AnomalyReport {
  std::vector<Rational> factor_anomalies;
  Rational factor_sum;
  Rational ambient_anomaly;
  bool conformal = false;
};

AnomalyReport anomaly_report(const EmbeddingData& e);
bool is_conformal(const EmbeddingData& e);

struct RankReport {
  int factor_rank_sum = 0;
  int ambient_rank = 0;
  int deficiency = 0;
  bool strictly_smaller = false;
};

RankReport rank_deficiency_check(const EmbeddingData& e);

EmbeddingData g2_f4_in_e8();
/// sl(r) + sl(s) in sl(rs), multi-index (s, r).
EmbeddingData sl_sl_in_sl(int r, int s);
/// so(p) + so(q) in so(pq), multi-index (q, p) in the so normalization.
/// so(3) is realized as A1, where that normalization doubles the index.
EmbeddingData so_so_in_so(int p, int q);
/// sp(2r) + sp(2s) in so(4rs), multi-index (s, r).
EmbeddingData sp_sp_in_so(int r, int s);
/// g in g with the given index; conformal only at index 1.
EmbeddingData self_embedding(const LieAlgebraId& id, int index);

/// The list checked by `embedding list`, in a fixed order.
std::vector<EmbeddingData> known_embeddings();

/// Accepts "g2xf4-in-e8", "sl2xsl3-in-sl6", "so5xso7-in-so35", "sp2xsp4-in-so8", "G2-in-G2", "G2-in-G2@2".
EmbeddingData embedding_by_name(const std::string& name);

}  // namespace sdual
