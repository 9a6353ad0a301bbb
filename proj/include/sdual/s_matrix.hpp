#pragma once

#include "sdual/fusion.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <mutex>
#include <vector>

namespace sdual {

using Real = boost::multiprecision::mpfr_float;

struct Complex {
  Real re;
  Real im;
};

/// Modular S-matrix of the level-l WZW model, as a numeric cross-check.
struct SMatrix {
  LieAlgebraId algebra;
  int level = 0;
  int digits = 50;
  std::vector<Weight> basis;  // level_weights order
  std::vector<std::vector<Complex>> s;
};

/// Sets the mpfr default precision to digits (plus guard digits) for its lifetime.
/// The default is process-wide, so scopes serialize on a shared recursive mutex.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_;
};

/// Working precision in decimal digits: $SDUAL_PRECISION if set, else 50.
int default_precision_digits();

/// Largest Weyl group for which the full matrix is computed.
inline constexpr std::size_t kMaxWeylGroupForSMatrix = 100000;

/// Kac-Peterson formula summed over W. Throws std::invalid_argument when
/// |W| > kMaxWeylGroupForSMatrix; s_matrix_vacuum_row has no such limit.
SMatrix s_matrix(const RootDatum& d, int level, int digits);

/// S_{0 lambda} for every lambda in P_l, from the product over positive roots.
std::vector<Real> s_matrix_vacuum_row(const RootDatum& d, int level, int digits);

/// max |(S S^dagger - I)_{ij}|
Real unitarity_residual(const SMatrix& m);
/// max |S_{ij} - S_{ji}|
Real symmetry_residual(const SMatrix& m);

/// S_{0 lambda} / S_{00}
Real quantum_dimension(const SMatrix& m, int index);

struct VerlindeFusion {
  std::vector<std::vector<std::vector<std::int64_t>>> table;  // table[i][j][k] = N^k_{ij}
  Real max_rounding_error;     // largest distance of a raw value from the nearest integer
  Real max_imaginary_part;
};

/// N^nu_{lambda mu} = sum_a S_{lambda a} S_{mu a} conj(S_{nu a}) / S_{0 a}, rounded.
VerlindeFusion verlinde_formula_fusion(const SMatrix& m);

}  // namespace sdual
