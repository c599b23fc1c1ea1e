#pragma once

#include <string>
#include <vector>

#include "hstab/ints.hpp"

namespace hstab {

// Generators of the stable characteristic-class algebra for one value of n:
// the Euler class in degree 2n and the Pontryagin classes p_i, 4i, for
// ceil((n+1)/4) <= i <= n-1.
struct CharClassAlphabet {
  int n = 0;
  std::vector<std::pair<std::string, int>> generators;  // (name, degree)
};

CharClassAlphabet char_class_alphabet(int n);

// Degrees deg(c) - 2n of the monomials c in the alphabet with
// 2n < deg(c) <= dmax + 2n, as a sorted multiset. Exhaustive enumeration
// of bounded exponent vectors.
std::vector<int> generator_degrees(int n, int dmax);

// Coefficients through degree tmax of prod_d 1/(1 - t^d); dimensions of the
// free graded-commutative algebra on even-degree generators.
std::vector<Int> hilbert_series(const std::vector<int>& degrees, int tmax);

}  // namespace hstab
