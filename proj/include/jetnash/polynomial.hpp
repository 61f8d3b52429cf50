#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "jetnash/monomial.hpp"
#include "jetnash/ring.hpp"

namespace jetnash {

/// Exact rational coefficient. Kept canonical (lowest terms, positive
/// denominator, zero as 0/1) at every construction site.
using Coefficient = mpq_class;

struct Term {
  Coefficient coefficient;
  Monomial monomial;
};

/// Sparse polynomial over Q. Terms are strictly descending under the ring's
/// monomial order, carry no zero coefficients, and the zero polynomial has
/// no terms. Values are immutable once built.
class Polynomial {
 public:
  /// The zero polynomial of `ring`.
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, Coefficient c);
  static Polynomial variable(RingPtr ring, std::size_t index, std::uint32_t exponent = 1);
  static Polynomial variable(RingPtr ring, const JetVariable& v, std::uint32_t exponent = 1);
  static Polynomial monomial(RingPtr ring, Coefficient c, Monomial m);
  /// Builds a polynomial from arbitrary terms: sorts, merges duplicates, drops zeros.
  static Polynomial fromTerms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t termCount() const noexcept { return terms_.size(); }
  bool isZero() const noexcept { return terms_.empty(); }
  bool isConstant() const noexcept;
  /// Nonzero constant.
  bool isUnit() const noexcept;
  std::uint64_t totalDegree() const noexcept;

  const Term& leadingTerm() const;
  const Monomial& leadingMonomial() const { return leadingTerm().monomial; }
  const Coefficient& leadingCoefficient() const { return leadingTerm().coefficient; }

  /// Divides by the leading coefficient. Zero stays zero.
  Polynomial monic() const;
  /// Scales to integer coefficients with content 1 and positive leading coefficient.
  Polynomial primitive() const;

  /// Degree of the polynomial in variable `index`.
  std::uint32_t degreeIn(std::size_t index) const noexcept;
  bool involves(std::size_t index) const noexcept { return degreeIn(index) > 0; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Coefficient& c, const Polynomial& f);
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  /// `this - c * m * g` in a single merge pass.
  Polynomial subtractMultiple(const Coefficient& c, const Monomial& m, const Polynomial& g) const;
  Polynomial multiplyTerm(const Coefficient& c, const Monomial& m) const;

  Polynomial pow(unsigned k) const;

  /// Re-expresses the polynomial in `target`, matching variables by base
  /// name and jet index. Throws DomainError if a used variable is missing.
  Polynomial mapInto(const RingPtr& target) const;

  /// Canonical text: descending terms, `*` between factors, `^` for powers.
  std::string toString() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sortedTerms);

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);

/// Orders two monomials under `order`.
std::strong_ordering compareMonomials(const Monomial& u, const Monomial& v,
                                      const MonomialOrder& order);

/// Formal partial derivative with respect to the variable at `index`.
Polynomial partialDerivative(const Polynomial& f, std::size_t index);
Polynomial partialDerivative(const Polynomial& f, const JetVariable& v);

/// Exact quotient f / g. Throws DomainError if g is zero or does not divide f.
Polynomial divideExact(const Polynomial& f, const Polynomial& g);

/// Renders a single coefficient the way Polynomial::toString does.
std::string formatCoefficient(const Coefficient& c);

}  // namespace jetnash
