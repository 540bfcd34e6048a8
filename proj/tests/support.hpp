#pragma once

#include "qgrass/scalar.hpp"

#include <random>
#include <vector>

namespace qgrass::test_support {

inline IntPoly random_int_poly(std::mt19937& rng, int max_degree, int max_coeff) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coef(-max_coeff, max_coeff);
  std::vector<BigInt> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPoly(std::move(c));
}

/// Random element of Q(q); about a third are Laurent polynomials.
inline QScalar random_scalar(std::mt19937& rng) {
  IntPoly num = random_int_poly(rng, 3, 4);
  std::uniform_int_distribution<int> kind(0, 2);
  IntPoly den;
  switch (kind(rng)) {
    case 0: den = IntPoly::monomial(1, std::uniform_int_distribution<int>(0, 3)(rng)); break;
    default:
      do den = random_int_poly(rng, 2, 3);
      while (den.is_zero());
  }
  return QScalar::from_polys(num, den);
}

}  // namespace qgrass::test_support
