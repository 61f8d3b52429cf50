#pragma once

#include <span>
#include <vector>

#include "jetnash/groebner.hpp"
#include "jetnash/polynomial.hpp"

namespace jetnash {

/// Jet order n over a base ring. The jet ring holds x, x_1, ..., x_n for
/// each base variable x, where x_i stands for D_i(x). Truncated series
/// arithmetic happens modulo t^(n+1).
class JetContext {
 public:
  /// `baseRing` must have role Base and no jet variables.
  JetContext(RingPtr baseRing, unsigned order);

  const RingPtr& baseRing() const noexcept { return base_; }
  const RingPtr& jetRing() const noexcept { return jet_; }
  unsigned order() const noexcept { return order_; }

  /// D_0 on the base ring: renames x to the jet-index-0 variable x.
  Polynomial rename(const Polynomial& f) const;

  /// Jet variable D_i(x) for base variable `base`.
  Polynomial jetVariable(std::string_view base, unsigned jetIndex) const;

 private:
  RingPtr base_;
  RingPtr jet_;
  unsigned order_;
};

/// Element of R_n[t]/(t^(n+1)): coefficients of t^0 ... t^n over the jet ring.
class TruncatedSeries {
 public:
  /// The zero series.
  explicit TruncatedSeries(const JetContext& ctx);
  TruncatedSeries(const JetContext& ctx, std::vector<Polynomial> coefficients);

  unsigned order() const noexcept { return static_cast<unsigned>(coefficients_.size() - 1); }
  const RingPtr& ring() const noexcept { return coefficients_.front().ring(); }
  const std::vector<Polynomial>& coefficients() const noexcept { return coefficients_; }
  const Polynomial& operator[](unsigned i) const { return coefficients_.at(i); }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  explicit TruncatedSeries(std::vector<Polynomial> coefficients)
      : coefficients_(std::move(coefficients)) {}
  static void requireCompatible(const TruncatedSeries& a, const TruncatedSeries& b);

  std::vector<Polynomial> coefficients_;
};

/// Cauchy product truncated at t^(n+1).
TruncatedSeries seriesMul(const TruncatedSeries& a, const TruncatedSeries& b);

/// gamma_n: substitutes x -> x + x_1 t + ... + x_n t^n in a base-ring
/// polynomial and expands modulo t^(n+1).
TruncatedSeries jetLift(const Polynomial& f, const JetContext& ctx);

/// D_i(f): the coefficient of t^i in jetLift(f).
Polynomial hsDerivative(const Polynomial& f, unsigned i, const JetContext& ctx);

/// Defining ideal of the jet scheme: D_i(f) for every relation f and
/// every 0 <= i <= n.
Ideal jetIdeal(std::span<const Polynomial> relations, const JetContext& ctx);

}  // namespace jetnash
