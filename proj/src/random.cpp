#include "jetnash/random.hpp"

#include <algorithm>
#include <numeric>

namespace jetnash {

Monomial randomMonomial(std::mt19937_64& rng, std::size_t variableCount, std::uint32_t maxDegree) {
  std::uniform_int_distribution<std::uint32_t> degreeDist(0, maxDegree);
  std::uniform_int_distribution<std::size_t> varDist(0, variableCount - 1);
  std::vector<std::uint32_t> e(variableCount, 0);
  if (variableCount == 0) return Monomial(std::move(e));
  const std::uint32_t degree = degreeDist(rng);
  for (std::uint32_t k = 0; k < degree; ++k) ++e[varDist(rng)];
  return Monomial(std::move(e));
}

Polynomial randomPolynomial(std::mt19937_64& rng, const RingPtr& ring,
                            const RandomPolynomialShape& shape) {
  std::uniform_int_distribution<std::size_t> termDist(0, shape.maxTerms);
  std::uniform_int_distribution<long> coeffDist(-shape.maxCoefficient, shape.maxCoefficient);
  std::uniform_int_distribution<long> denDist(1, std::max(1L, shape.maxCoefficient));
  std::vector<Term> terms;
  const std::size_t count = termDist(rng);
  for (std::size_t i = 0; i < count; ++i) {
    Coefficient c(coeffDist(rng), shape.rational ? denDist(rng) : 1);
    c.canonicalize();
    terms.push_back({c, randomMonomial(rng, ring->variableCount(), shape.maxDegree)});
  }
  return Polynomial::fromTerms(ring, std::move(terms));
}

PolyMatrix randomUnimodular(std::mt19937_64& rng, const RingPtr& ring, std::size_t size,
                            long maxMultiplier) {
  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> signDist(0, 1);
  PolyMatrix u(ring, size, size);
  for (std::size_t i = 0; i < size; ++i)
    u.set(i, perm[i], Polynomial::constant(ring, signDist(rng) ? 1 : -1));
  if (size < 2) return u;

  std::uniform_int_distribution<std::size_t> idx(0, size - 1);
  std::uniform_int_distribution<long> mult(-maxMultiplier, maxMultiplier);
  for (std::size_t step = 0; step < 2 * size; ++step) {
    const std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    const Polynomial k = Polynomial::constant(ring, Coefficient(mult(rng)));
    // column a += k * column b
    for (std::size_t r = 0; r < size; ++r) u.set(r, a, u.at(r, a) + k * u.at(r, b));
  }
  return u;
}

}  // namespace jetnash
