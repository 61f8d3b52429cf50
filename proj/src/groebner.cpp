#include "jetnash/groebner.hpp"

#include <algorithm>
#include <tuple>

#include "jetnash/errors.hpp"

namespace jetnash {

namespace {

// Irreducible leading terms move to the remainder one at a time.
Polynomial reduceFully(const Polynomial& f, std::span<const Polynomial> basis) {
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.isZero()) {
    const Term& lead = p.leadingTerm();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.isZero() && g.leadingMonomial().divides(lead.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      Coefficient c = lead.coefficient / divisor->leadingCoefficient();
      Monomial m = lead.monomial.quotient(divisor->leadingMonomial());
      p = p.subtractMultiple(c, m, *divisor);
    } else {
      remainder.push_back(lead);
      p = p.subtractMultiple(Coefficient(1), Monomial(lead.monomial.size()),
                             Polynomial::monomial(p.ring(), lead.coefficient, lead.monomial));
    }
  }
  return Polynomial::fromTerms(f.ring(), std::move(remainder));
}

struct CriticalPair {
  std::size_t first;
  std::size_t second;
  Monomial lcm;
};

}  // namespace

Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> basis) {
  for (const auto& g : basis) requireSameRing(f.ring(), g.ring(), "normalForm");
  if (basis.empty()) return f;
  return reduceFully(f, basis);
}

Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> basis,
                      const MonomialOrder& order) {
  if (f.ring()->order() == order) return normalForm(f, basis);
  RingPtr reordered = f.ring()->withOrder(order);
  std::vector<Polynomial> mapped;
  mapped.reserve(basis.size());
  for (const auto& g : basis) {
    requireSameRing(f.ring(), g.ring(), "normalForm");
    mapped.push_back(g.mapInto(reordered));
  }
  return normalForm(f.mapInto(reordered), mapped).mapInto(f.ring());
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g) {
  requireSameRing(f.ring(), g.ring(), "sPolynomial");
  if (f.isZero() || g.isZero()) return Polynomial(f.ring());
  const Monomial l = Monomial::lcm(f.leadingMonomial(), g.leadingMonomial());
  Polynomial a = f.multiplyTerm(1 / f.leadingCoefficient(), l.quotient(f.leadingMonomial()));
  return a.subtractMultiple(1 / g.leadingCoefficient(), l.quotient(g.leadingMonomial()), g);
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators,
                                   const GroebnerLimits& limits) {
  std::vector<Polynomial> polys;
  std::vector<std::size_t> active;
  std::vector<CriticalPair> pairs;
  if (generators.empty()) return {};
  const RingPtr ring = generators.front().ring();
  const MonomialOrder& order = ring->order();

  auto activePolys = [&]() {
    std::vector<Polynomial> out;
    out.reserve(active.size());
    for (auto i : active) out.push_back(polys[i]);
    return out;
  };

  // Gebauer-Moeller installation of a new basis element `h`.
  auto install = [&](std::size_t h) {
    const Monomial& lh = polys[h].leadingMonomial();
    std::vector<CriticalPair> candidates;
    for (auto g : active)
      candidates.push_back({g, h, Monomial::lcm(polys[g].leadingMonomial(), lh)});

    std::vector<CriticalPair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const auto& p = candidates[k];
      bool keep = Monomial::coprime(polys[p.first].leadingMonomial(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < candidates.size() && keep; ++q)
          if (candidates[q].lcm.divides(p.lcm)) keep = false;
        for (const auto& q : kept)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::erase_if(kept, [&](const CriticalPair& p) {
      return Monomial::coprime(polys[p.first].leadingMonomial(), lh);
    });

    std::erase_if(pairs, [&](const CriticalPair& p) {
      if (!lh.divides(p.lcm)) return false;
      const auto l1 = Monomial::lcm(polys[p.first].leadingMonomial(), lh);
      const auto l2 = Monomial::lcm(polys[p.second].leadingMonomial(), lh);
      return !(l1 == p.lcm) && !(l2 == p.lcm);
    });
    pairs.insert(pairs.end(), kept.begin(), kept.end());
    if (pairs.size() > limits.maxPairs)
      throw ResourceLimitError("Groebner pair queue exceeded " + std::to_string(limits.maxPairs));

    std::erase_if(active, [&](std::size_t g) { return lh.divides(polys[g].leadingMonomial()); });
    active.push_back(h);
  };

  auto addReduced = [&](const Polynomial& f) {
    Polynomial h = normalForm(f, activePolys());
    if (h.isZero()) return;
    polys.push_back(h.monic());
    install(polys.size() - 1);
  };

  for (const auto& g : generators) {
    requireSameRing(ring, g.ring(), "buchberger");
    if (g.isUnit()) return {Polynomial::constant(ring, 1)};
    if (!g.isZero()) addReduced(g);
  }

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first (degree, then order, then age).
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      if (it->lcm.degree() != best->lcm.degree()) {
        if (it->lcm.degree() < best->lcm.degree()) best = it;
        continue;
      }
      auto c = order.compare(it->lcm, best->lcm);
      if (c == std::strong_ordering::less ||
          (c == std::strong_ordering::equal &&
           std::tie(it->second, it->first) < std::tie(best->second, best->first)))
        best = it;
    }
    CriticalPair pair = std::move(*best);
    pairs.erase(best);
    addReduced(sPolynomial(polys[pair.first], polys[pair.second]));
    if (!active.empty() && polys[active.back()].isUnit()) return {Polynomial::constant(ring, 1)};
  }

  std::vector<Polynomial> basis = activePolys();
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.leadingMonomial(), b.leadingMonomial());
  });
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(basis.size() - 1);
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i) others.push_back(basis[j]);
    basis[i] = normalForm(basis[i], others).monic();
  }
  return basis;
}

bool isGroebnerBasis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normalForm(sPolynomial(basis[i], basis[j]), basis).isZero()) return false;
  return true;
}

}  // namespace jetnash
