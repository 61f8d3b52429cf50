#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "jetnash/polynomial.hpp"

namespace jetnash {

struct GroebnerLimits {
  /// Cap on the number of pending critical pairs.
  std::size_t maxPairs = 1'000'000;
};

/// Full multivariate division remainder of `f` by `basis` under the ring's
/// order: no term of the result is divisible by a leading monomial of the
/// basis. Zero basis elements are ignored.
Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> basis);

/// As above under an explicit order. If `order` differs from the ring's
/// order, the computation runs in a re-ordered copy of the ring and the
/// remainder is mapped back.
Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> basis,
                      const MonomialOrder& order);

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis of the ideal generated by `generators`, under the
/// order of their ring. The result is monic, interreduced and sorted by
/// descending leading monomial, hence unique for the ideal and order. An
/// empty input (or only zeros) yields an empty basis.
///
/// Buchberger's algorithm with the Gebauer-Moeller installation of the
/// coprime and chain criteria and the normal selection strategy.
std::vector<Polynomial> buchberger(std::span<const Polynomial> generators,
                                   const GroebnerLimits& limits = {});

/// Checks the Buchberger criterion: every S-polynomial reduces to zero.
bool isGroebnerBasis(std::span<const Polynomial> basis);

/// Finitely generated ideal with an optional cached reduced Groebner basis.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool hasGroebnerBasis() const noexcept { return basis_ != nullptr; }

  /// Reduced Groebner basis under the ring's order (cached if present).
  std::vector<Polynomial> groebnerBasis(const GroebnerLimits& limits = {}) const;
  /// Copy of this ideal carrying its Groebner basis.
  Ideal withGroebnerBasis(const GroebnerLimits& limits = {}) const;

  /// Same generators mapped into `target` (variables matched by name).
  Ideal mapInto(const RingPtr& target) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<const std::vector<Polynomial>> basis_;
};

bool contains(const Ideal& ideal, const Polynomial& f);
/// First generator of `sub` that is not a member of `ideal`, if any.
std::optional<Polynomial> firstNonMember(const Ideal& ideal, const Ideal& sub);
/// `sub` is contained in `ideal`.
bool containsIdeal(const Ideal& ideal, const Ideal& sub);
bool idealEqual(const Ideal& a, const Ideal& b);
bool isUnitIdeal(const Ideal& ideal);
bool isZeroIdeal(const Ideal& ideal);

Ideal idealSum(const Ideal& a, const Ideal& b);
Ideal idealProduct(const Ideal& a, const Ideal& b);
Ideal idealPower(const Ideal& a, unsigned k);

/// Irredundant generating subset: generators are deduplicated, then each is
/// dropped (last first) when it lies in the ideal of the remaining ones.
Ideal interreduce(const Ideal& ideal, const GroebnerLimits& limits = {});

/// I intersected with the subring not involving `variables`, returned in the
/// original ring. Uses a block elimination order with `variables` first.
Ideal eliminate(const Ideal& ideal, std::span<const JetVariable> variables);

/// Saturation (I : f^infinity), by adjoining a fresh variable w, adding
/// 1 - w*f and eliminating w.
Ideal saturate(const Ideal& ideal, const Polynomial& f);

/// Quotient ring R/I whose elements are represented by their normal forms
/// with respect to a fixed Groebner basis of I.
class QuotientRing {
 public:
  explicit QuotientRing(Ideal relations);

  const RingPtr& ambient() const noexcept { return relations_.ring(); }
  const Ideal& relations() const noexcept { return relations_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }

  Polynomial reduce(const Polynomial& f) const;
  bool equal(const Polynomial& f, const Polynomial& g) const;
  bool isZero(const Polynomial& f) const { return reduce(f).isZero(); }
  Polynomial add(const Polynomial& f, const Polynomial& g) const { return reduce(f + g); }
  Polynomial mul(const Polynomial& f, const Polynomial& g) const { return reduce(f * g); }

 private:
  Ideal relations_;
  std::vector<Polynomial> basis_;
};

}  // namespace jetnash
