#pragma once

#include "sdual/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

// Finite-dimensional simple Lie algebras: root data, weights, Weyl dimension,
// Freudenthal multiplicities, Racah-Speiser tensor products and level sets.
//
// Conventions (Bourbaki numbering for every type):
//   * cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j);
//     row i lists the Dynkin labels of the simple root alpha_i.
//   * Weights are Dynkin-label vectors in the fundamental-weight basis, in the
//     same order as the Cartan-matrix rows. Roots are coefficient vectors in the
//     simple-root basis.
//   * The invariant form is normalized so that long roots have (alpha, alpha) = 2.
namespace sdual {

using Labels = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

struct LieAlgebraId {
  char series = 'A';
  int rank = 1;

  /// Parses "A5", "g2", "E8". Throws std::invalid_argument on malformed or invalid input.
  static LieAlgebraId parse(std::string_view text);
  std::string name() const;

  auto operator<=>(const LieAlgebraId&) const = default;
};

bool is_valid(const LieAlgebraId& id);

struct Weight {
  LieAlgebraId algebra;
  Labels labels;

  std::string to_string() const;  // "[1,0]"

  auto operator<=>(const Weight&) const = default;
};

/// Parses a Dynkin-label array such as "[1,0,0,1]".
Labels parse_labels(std::string_view text);
std::string labels_to_string(const Labels& labels);

struct RootDatum {
  LieAlgebraId algebra;
  IntMatrix cartan;
  std::vector<Rational> symmetrizer;       // d_i = (alpha_i, alpha_i) / 2
  std::vector<Labels> positive_roots;      // simple-root coordinates, height-then-lex order
  Labels highest_root;                     // simple-root coordinates
  Labels weyl_vector;                      // Dynkin labels, all ones
  RationalMatrix form_matrix;              // (omega_i, omega_j)

  // Derived data, filled by build_root_datum.
  std::int64_t form_denominator = 1;       // lcm of denominators of form_matrix
  std::vector<std::vector<std::int64_t>> form_scaled;  // form_matrix * form_denominator
  std::vector<Labels> positive_root_labels;  // Dynkin labels of each positive root
  std::vector<Labels> positive_coroots;      // coefficients in the simple-coroot basis
  Labels comarks;                            // (omega_i, theta)
  Labels highest_root_labels;
  std::vector<int> root_heights;

  int rank() const { return algebra.rank; }
  int dimension() const { return 2 * static_cast<int>(positive_roots.size()) + rank(); }

  /// (x, y) scaled by form_denominator; exact.
  std::int64_t scaled_inner(const Labels& x, const Labels& y) const;
  Rational inner(const Labels& x, const Labels& y) const;

  /// Level (lambda, theta) of a weight.
  int level_of(const Labels& x) const;

  Labels root_to_labels(const Labels& root_coords) const;

  /// Height of a root-lattice element given in Dynkin labels; throws if not in the root lattice.
  int height_of_labels(const Labels& x) const;
  bool in_root_lattice(const Labels& x) const;

  Weight zero() const;
  /// omega_i for 1 <= i <= rank.
  Weight fundamental(int i) const;
  Weight weight(Labels labels) const;

  // Inverse of cartan^T scaled by its determinant, for labels -> root coordinates.
  std::vector<std::vector<std::int64_t>> inverse_cartan_t_scaled;
  std::int64_t cartan_determinant = 1;
};

RootDatum build_root_datum(const LieAlgebraId& id);

/// Process-wide memoized root datum; safe to call concurrently.
const RootDatum& root_datum(const LieAlgebraId& id);

Rational inner_product(const RootDatum& d, const Weight& x, const Weight& y);

int dual_coxeter(const RootDatum& d);

bool is_dominant(const Labels& x);

BigInt weyl_dimension(const RootDatum& d, const Weight& lambda);

struct WeightSystem {
  Weight highest;
  std::map<Labels, std::int64_t> multiplicities;

  std::int64_t total() const;
};

/// Dominant weights of V_lambda with multiplicities, via Freudenthal's recursion.
std::map<Labels, std::int64_t> dominant_multiplicities(const RootDatum& d, const Labels& lambda);

WeightSystem freudenthal_weights(const RootDatum& d, const Weight& lambda);

/// Racah-Speiser decomposition of V_lambda (x) V_mu into irreducibles.
std::map<Weight, std::int64_t> tensor_decompose(const RootDatum& d, const Weight& lambda, const Weight& mu);

/// All dominant weights of level <= ell, ordered by level then lexicographically.
std::vector<Weight> level_weights(const RootDatum& d, int ell);

/// -w_0(lambda), the highest weight of the dual representation.
Weight dual_weight(const RootDatum& d, const Weight& lambda);

}  // namespace sdual
