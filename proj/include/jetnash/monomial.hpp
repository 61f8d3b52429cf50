#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace jetnash {

/// Power product over the variables of a ring, stored as a dense exponent
/// vector indexed by variable position. All-zero exponents is the unit.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t variableCount) : exponents_(variableCount, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents);

  static Monomial variable(std::size_t variableCount, std::size_t index,
                           std::uint32_t exponent = 1);

  std::size_t size() const noexcept { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return exponents_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool isOne() const noexcept { return degree_ == 0; }

  /// Returns a copy with exponent of variable `i` set to `e`.
  Monomial withExponent(std::size_t i, std::uint32_t e) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exponents_ == b.exponents_;
  }

  bool divides(const Monomial& other) const noexcept;
  /// `this / divisor`; requires `divisor.divides(*this)`.
  Monomial quotient(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  std::vector<std::uint32_t> exponents_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Admissible monomial orders. Variable 0 has the highest precedence.
///
/// BlockElimination(k) compares the first k variables by degrevlex and breaks
/// ties with degrevlex on the rest; any monomial involving the first block
/// outranks every monomial that does not.
class MonomialOrder {
 public:
  enum class Kind { Degrevlex, Lex, BlockElimination };

  constexpr MonomialOrder() = default;

  static constexpr MonomialOrder degrevlex() { return MonomialOrder(Kind::Degrevlex, 0); }
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static constexpr MonomialOrder blockElimination(std::size_t splitPoint) {
    return MonomialOrder(Kind::BlockElimination, splitPoint);
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t splitPoint() const noexcept { return split_; }

  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  bool greater(const Monomial& u, const Monomial& v) const {
    return compare(u, v) == std::strong_ordering::greater;
  }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  constexpr MonomialOrder(Kind kind, std::size_t split) : kind_(kind), split_(split) {}

  Kind kind_ = Kind::Degrevlex;
  std::size_t split_ = 0;
};

}  // namespace jetnash
