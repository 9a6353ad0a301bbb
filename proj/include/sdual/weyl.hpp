#pragma once

#include "sdual/lie_algebra.hpp"

#include <cstddef>
#include <vector>

namespace sdual {

/// s_i acting on a Dynkin-label vector.
void reflect_in_place(const RootDatum& d, Labels& x, int i);

struct DominantImage {
  Labels labels;
  int length_parity = 0;  // parity of the number of simple reflections used
};

/// Moves x into the closed dominant chamber by simple reflections.
DominantImage to_dominant(const RootDatum& d, Labels x);

/// For a rho-shifted weight x: the dominant image and the sign (-1)^length, or
/// sign 0 when the image lies on a wall (some label is zero).
struct ShiftedReflection {
  Labels labels;
  int sign = 0;
};
ShiftedReflection reflect_shifted_to_dominant(const RootDatum& d, Labels x);

/// Kac-Walton folding of a rho-shifted weight into the open fundamental alcove at
/// shifted level k = level + h^vee. sign 0 means the orbit meets a wall.
ShiftedReflection reflect_shifted_to_alcove(const RootDatum& d, Labels x, int shifted_level);

/// |W| by Macdonald's product formula prod_{alpha>0} (ht(alpha)+1)/ht(alpha).
BigInt weyl_group_order(const RootDatum& d);

/// Order of the stabilizer of a dominant weight (the parabolic subgroup on its zero labels).
BigInt stabilizer_order(const RootDatum& d, const Labels& dominant);

/// |W . x| for dominant x.
BigInt orbit_size(const RootDatum& d, const Labels& dominant);

/// Full W-orbit of a dominant weight, by walking simple reflections.
std::vector<Labels> weyl_orbit(const RootDatum& d, const Labels& dominant);

struct WeylElement {
  IntMatrix matrix;  // acts on Dynkin-label column vectors
  int sign = 1;      // (-1)^length
};

/// Every element of W; throws std::invalid_argument if |W| exceeds limit.
std::vector<WeylElement> weyl_group_elements(const RootDatum& d, std::size_t limit);

Labels act(const WeylElement& w, const Labels& x);

}  // namespace sdual
