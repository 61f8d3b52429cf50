#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetnash/monomial.hpp"

namespace jetnash {

/// A ring variable: a base symbol together with its jet index.
/// Jet index 0 renders as the bare base name, index i >= 1 as `base_i`.
struct JetVariable {
  std::string base;
  unsigned jetIndex = 0;

  std::string name() const;
  friend bool operator==(const JetVariable&, const JetVariable&) = default;
};

/// Distinguishes otherwise identical variable registries. A base ring and
/// the order-0 jet ring over it are different rings: D_0 is an explicit
/// renaming between them.
enum class RingRole { Base, Jet, Auxiliary };

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

/// Polynomial ring over Q. The variable list is laid out base-major:
/// x, x_1, ..., x_n, y, y_1, ..., y_n. Earlier variables have higher
/// precedence in every monomial order.
class PolynomialRing {
 public:
  /// Ring on `baseVariables` with `maxJetIndex + 1` copies of each.
  static RingPtr create(std::vector<std::string> baseVariables, unsigned maxJetIndex = 0,
                        MonomialOrder order = MonomialOrder::degrevlex(),
                        RingRole role = RingRole::Base);

  /// Ring on an arbitrary explicit variable list (used for elimination).
  static RingPtr fromVariables(std::vector<JetVariable> variables, MonomialOrder order,
                               RingRole role = RingRole::Auxiliary);

  const std::vector<std::string>& baseVariables() const noexcept { return bases_; }
  const std::vector<JetVariable>& variables() const noexcept { return variables_; }
  std::size_t variableCount() const noexcept { return variables_.size(); }
  unsigned maxJetIndex() const noexcept { return maxJetIndex_; }
  const MonomialOrder& order() const noexcept { return order_; }
  RingRole role() const noexcept { return role_; }

  std::optional<std::size_t> indexOf(const JetVariable& v) const;
  std::optional<std::size_t> indexOf(std::string_view base, unsigned jetIndex) const;

  /// Same variables and role, different order.
  RingPtr withOrder(MonomialOrder order) const;

  /// Structural equality: variables, order and role.
  bool sameAs(const PolynomialRing& other) const noexcept;

  std::string describe() const;

 private:
  PolynomialRing() = default;

  std::vector<std::string> bases_;
  std::vector<JetVariable> variables_;
  unsigned maxJetIndex_ = 0;
  MonomialOrder order_;
  RingRole role_ = RingRole::Base;
};

inline bool sameRing(const RingPtr& a, const RingPtr& b) noexcept {
  return a == b || (a && b && a->sameAs(*b));
}

/// Throws RingMismatchError unless `a` and `b` are the same ring.
void requireSameRing(const RingPtr& a, const RingPtr& b, std::string_view operation);

/// Returns true for names matching [A-Za-z][A-Za-z0-9]*.
bool isValidBaseName(std::string_view name) noexcept;

}  // namespace jetnash
