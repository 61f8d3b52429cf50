#include "jetnash/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "jetnash/errors.hpp"

namespace jetnash {

std::string JetVariable::name() const {
  return jetIndex == 0 ? base : base + "_" + std::to_string(jetIndex);
}

bool isValidBaseName(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

RingPtr PolynomialRing::create(std::vector<std::string> baseVariables, unsigned maxJetIndex,
                               MonomialOrder order, RingRole role) {
  std::set<std::string> seen;
  for (const auto& b : baseVariables) {
    if (!isValidBaseName(b)) throw DomainError("invalid variable name '" + b + "'");
    if (!seen.insert(b).second) throw DomainError("duplicate variable name '" + b + "'");
  }
  auto ring = std::shared_ptr<PolynomialRing>(new PolynomialRing());
  for (const auto& b : baseVariables)
    for (unsigned j = 0; j <= maxJetIndex; ++j) ring->variables_.push_back({b, j});
  ring->bases_ = std::move(baseVariables);
  ring->maxJetIndex_ = maxJetIndex;
  ring->order_ = order;
  ring->role_ = role;
  return ring;
}

RingPtr PolynomialRing::fromVariables(std::vector<JetVariable> variables, MonomialOrder order,
                                      RingRole role) {
  auto ring = std::shared_ptr<PolynomialRing>(new PolynomialRing());
  for (std::size_t i = 0; i < variables.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (variables[i] == variables[j])
        throw DomainError("duplicate variable '" + variables[i].name() + "'");
    const auto& b = variables[i].base;
    if (std::find(ring->bases_.begin(), ring->bases_.end(), b) == ring->bases_.end())
      ring->bases_.push_back(b);
    ring->maxJetIndex_ = std::max(ring->maxJetIndex_, variables[i].jetIndex);
  }
  ring->variables_ = std::move(variables);
  ring->order_ = order;
  ring->role_ = role;
  return ring;
}

std::optional<std::size_t> PolynomialRing::indexOf(const JetVariable& v) const {
  return indexOf(v.base, v.jetIndex);
}

std::optional<std::size_t> PolynomialRing::indexOf(std::string_view base,
                                                   unsigned jetIndex) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].jetIndex == jetIndex && variables_[i].base == base) return i;
  return std::nullopt;
}

RingPtr PolynomialRing::withOrder(MonomialOrder order) const {
  auto ring = std::shared_ptr<PolynomialRing>(new PolynomialRing(*this));
  ring->order_ = order;
  return ring;
}

bool PolynomialRing::sameAs(const PolynomialRing& other) const noexcept {
  return role_ == other.role_ && order_ == other.order_ && variables_ == other.variables_;
}

std::string PolynomialRing::describe() const {
  std::string s = "Q[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) s += ",";
    s += variables_[i].name();
  }
  return s + "] (" + order_.name() + ")";
}

void requireSameRing(const RingPtr& a, const RingPtr& b, std::string_view operation) {
  if (!sameRing(a, b))
    throw RingMismatchError(std::string(operation) + ": ring mismatch between " +
                            (a ? a->describe() : "<null>") + " and " +
                            (b ? b->describe() : "<null>"));
}

}  // namespace jetnash
