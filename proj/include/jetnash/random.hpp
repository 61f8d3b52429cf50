#pragma once

#include <cstdint>
#include <random>

#include "jetnash/polymatrix.hpp"
#include "jetnash/polynomial.hpp"

namespace jetnash {

/// Generators of random instances for the property suites.
struct RandomPolynomialShape {
  std::size_t maxTerms = 4;
  std::uint32_t maxDegree = 4;
  long maxCoefficient = 5;
  /// Also draw denominators in [1, maxCoefficient].
  bool rational = false;
};

Monomial randomMonomial(std::mt19937_64& rng, std::size_t variableCount, std::uint32_t maxDegree);

Polynomial randomPolynomial(std::mt19937_64& rng, const RingPtr& ring,
                            const RandomPolynomialShape& shape = {});

/// Integer matrix with determinant +1 or -1: a signed permutation composed
/// with random elementary column operations.
PolyMatrix randomUnimodular(std::mt19937_64& rng, const RingPtr& ring, std::size_t size,
                            long maxMultiplier = 2);

}  // namespace jetnash
