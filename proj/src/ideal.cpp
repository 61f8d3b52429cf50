#include <algorithm>

#include "jetnash/errors.hpp"
#include "jetnash/groebner.hpp"

namespace jetnash {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("ideal requires a ring");
  generators_.reserve(generators.size());
  for (auto& g : generators) {
    requireSameRing(ring_, g.ring(), "Ideal");
    if (!g.isZero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

std::vector<Polynomial> Ideal::groebnerBasis(const GroebnerLimits& limits) const {
  if (basis_) return *basis_;
  return buchberger(generators_, limits);
}

Ideal Ideal::withGroebnerBasis(const GroebnerLimits& limits) const {
  if (basis_) return *this;
  Ideal copy = *this;
  copy.basis_ = std::make_shared<const std::vector<Polynomial>>(buchberger(generators_, limits));
  return copy;
}

Ideal Ideal::mapInto(const RingPtr& target) const {
  std::vector<Polynomial> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(g.mapInto(target));
  return Ideal(target, std::move(gens));
}

namespace {

bool memberOfBasis(std::span<const Polynomial> basis, const Polynomial& f) {
  return f.isZero() || normalForm(f, basis).isZero();
}

}  // namespace

bool contains(const Ideal& ideal, const Polynomial& f) {
  requireSameRing(ideal.ring(), f.ring(), "contains");
  if (f.isZero()) return true;
  return memberOfBasis(ideal.groebnerBasis(), f);
}

std::optional<Polynomial> firstNonMember(const Ideal& ideal, const Ideal& sub) {
  requireSameRing(ideal.ring(), sub.ring(), "containment");
  const auto basis = ideal.groebnerBasis();
  for (const auto& g : sub.generators())
    if (!memberOfBasis(basis, g)) return g;
  return std::nullopt;
}

bool containsIdeal(const Ideal& ideal, const Ideal& sub) {
  return !firstNonMember(ideal, sub).has_value();
}

bool idealEqual(const Ideal& a, const Ideal& b) {
  requireSameRing(a.ring(), b.ring(), "idealEqual");
  return containsIdeal(a, b) && containsIdeal(b, a);
}

bool isUnitIdeal(const Ideal& ideal) {
  for (const auto& g : ideal.generators())
    if (g.isUnit()) return true;
  const auto basis = ideal.groebnerBasis();
  return basis.size() == 1 && basis.front().isUnit();
}

bool isZeroIdeal(const Ideal& ideal) { return ideal.generators().empty(); }

Ideal idealSum(const Ideal& a, const Ideal& b) {
  requireSameRing(a.ring(), b.ring(), "idealSum");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal idealProduct(const Ideal& a, const Ideal& b) {
  requireSameRing(a.ring(), b.ring(), "idealProduct");
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) {
      Polynomial p = f * g;
      if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
    }
  return Ideal(a.ring(), std::move(gens));
}

Ideal idealPower(const Ideal& a, unsigned k) {
  if (k == 0) throw DomainError("idealPower: exponent must be positive");
  Ideal result = a;
  for (unsigned i = 1; i < k; ++i) result = idealProduct(result, a);
  return result;
}

namespace {

// g is a scalar-times-monomial multiple of h.
bool isTermMultiple(const Polynomial& g, const Polynomial& h) {
  if (g.termCount() != h.termCount() || !h.leadingMonomial().divides(g.leadingMonomial()))
    return false;
  const Coefficient c = g.leadingCoefficient() / h.leadingCoefficient();
  const Monomial m = g.leadingMonomial().quotient(h.leadingMonomial());
  return h.multiplyTerm(c, m) == g;
}

}  // namespace

Ideal interreduce(const Ideal& ideal, const GroebnerLimits& limits) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators())
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);

  for (const auto& g : gens)
    if (g.isUnit()) return Ideal::unit(ideal.ring());

  // Cheap pass: drop generators that are term multiples of another.
  for (std::size_t i = gens.size(); i-- > 0;) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i && isTermMultiple(gens[i], gens[j])) {
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
        break;
      }
    }
  }

  for (std::size_t i = gens.size(); i-- > 0;) {
    if (gens.size() == 1) break;
    std::vector<Polynomial> others;
    others.reserve(gens.size() - 1);
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (memberOfBasis(buchberger(others, limits), gens[i]))
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return Ideal(ideal.ring(), std::move(gens));
}

namespace {

// Computes I ∩ k[remaining variables] in an auxiliary ring whose first
// `eliminated.size()` variables are `eliminated`.
Ideal eliminateVia(const Ideal& ideal, const std::vector<JetVariable>& eliminated,
                   const std::vector<Polynomial>& extraGenerators, const RingPtr& aux) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.mapInto(aux));
  gens.insert(gens.end(), extraGenerators.begin(), extraGenerators.end());
  const auto basis = buchberger(gens);
  std::vector<Polynomial> kept;
  for (const auto& g : basis) {
    bool free = true;
    for (std::size_t v = 0; v < eliminated.size() && free; ++v) free = !g.involves(v);
    if (free) kept.push_back(g.mapInto(ideal.ring()));
  }
  return Ideal(ideal.ring(), std::move(kept));
}

}  // namespace

Ideal eliminate(const Ideal& ideal, std::span<const JetVariable> variables) {
  const auto& ring = ideal.ring();
  std::vector<JetVariable> eliminated;
  for (const auto& v : variables)
    if (ring->indexOf(v) && std::find(eliminated.begin(), eliminated.end(), v) == eliminated.end())
      eliminated.push_back(v);
  if (eliminated.empty() || ideal.generators().empty()) return ideal;

  std::vector<JetVariable> layout = eliminated;
  for (const auto& v : ring->variables())
    if (std::find(eliminated.begin(), eliminated.end(), v) == eliminated.end()) layout.push_back(v);
  auto aux = PolynomialRing::fromVariables(
      layout, MonomialOrder::blockElimination(eliminated.size()), RingRole::Auxiliary);
  return eliminateVia(ideal, eliminated, {}, aux);
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  requireSameRing(ideal.ring(), f.ring(), "saturate");
  if (f.isZero()) throw DomainError("saturate: saturating polynomial must be nonzero");
  if (f.isUnit() || ideal.generators().empty()) return ideal;

  const auto& ring = ideal.ring();
  JetVariable fresh{"w", 0};
  for (unsigned k = 1; ring->indexOf(fresh); ++k) fresh.base = "w" + std::to_string(k);

  std::vector<JetVariable> layout{fresh};
  layout.insert(layout.end(), ring->variables().begin(), ring->variables().end());
  auto aux = PolynomialRing::fromVariables(layout, MonomialOrder::blockElimination(1),
                                           RingRole::Auxiliary);
  Polynomial w = Polynomial::variable(aux, 0);
  Polynomial relation = Polynomial::constant(aux, 1) - w * f.mapInto(aux);
  return eliminateVia(ideal, {fresh}, {relation}, aux);
}

QuotientRing::QuotientRing(Ideal relations)
    : relations_(relations.withGroebnerBasis()), basis_(relations_.groebnerBasis()) {}

Polynomial QuotientRing::reduce(const Polynomial& f) const {
  requireSameRing(ambient(), f.ring(), "QuotientRing");
  return normalForm(f, basis_);
}

bool QuotientRing::equal(const Polynomial& f, const Polynomial& g) const {
  return reduce(f - g).isZero();
}

}  // namespace jetnash
