#pragma once

#include "sdual/lie_algebra.hpp"

#include <string>
#include <vector>

namespace sdual {

/// Dimensions of the L_0-eigenspaces of H_lambda(g, level), indexed by depth 0..N.
struct GradedDims {
  LieAlgebraId algebra;
  int level = 0;
  Weight highest_weight;
  std::vector<BigInt> dims;
};

/// Affine Freudenthal recursion on the finite-dominant weights of each depth.
/// Throws std::invalid_argument unless lambda is dominant of level <= level.
GradedDims graded_dims(const RootDatum& d, int level, const Weight& lambda, int depth);

/// Coefficients of Theta_E8(q) / phi(q)^8 up to q^N, the lattice theta series
/// counted directly over the E8 lattice.
std::vector<BigInt> theta_eta_oracle(int N);

struct BranchingSummand {
  Weight left;
  Weight right;
  int depth_offset = 0;
};

struct BranchingClaim {
  LieAlgebraId ambient;
  int ambient_level = 1;
  Weight ambient_weight;
  LieAlgebraId left;
  int left_level = 1;
  LieAlgebraId right;
  int right_level = 1;
  std::vector<BranchingSummand> summands;
};

/// Offset Delta_left + Delta_right - Delta_ambient; throws std::logic_error unless it is a nonnegative integer.
int branching_offset(const BranchingClaim& c, const Weight& left, const Weight& right);

/// H_0(e8,1) = H_0(g2,1) H_0(f4,1) + H_w1(g2,1) H_w4(f4,1), offsets from trace anomalies.
BranchingClaim e8_g2_f4_claim();

struct BranchingRow {
  int depth = 0;
  BigInt ambient;
  BigInt summed;
  bool pass = false;
};

struct BranchingReport {
  std::vector<BranchingRow> rows;
  std::vector<std::string> problems;  // offset mismatches etc.
  bool pass = false;
};

BranchingReport verify_branching(const BranchingClaim& c, int depth);

}  // namespace sdual
