#include "jetnash/jets.hpp"

#include <map>

#include "jetnash/errors.hpp"

namespace jetnash {

JetContext::JetContext(RingPtr baseRing, unsigned order) : base_(std::move(baseRing)), order_(order) {
  if (!base_) throw DomainError("JetContext requires a base ring");
  if (base_->role() != RingRole::Base || base_->maxJetIndex() != 0)
    throw DomainError("JetContext: " + base_->describe() + " is not a base ring");
  MonomialOrder jetOrder = base_->order().kind() == MonomialOrder::Kind::Lex
                               ? MonomialOrder::lex()
                               : MonomialOrder::degrevlex();
  jet_ = PolynomialRing::create(base_->baseVariables(), order_, jetOrder, RingRole::Jet);
}

Polynomial JetContext::rename(const Polynomial& f) const {
  requireSameRing(base_, f.ring(), "D_0");
  return f.mapInto(jet_);
}

Polynomial JetContext::jetVariable(std::string_view base, unsigned jetIndex) const {
  auto idx = jet_->indexOf(base, jetIndex);
  if (!idx) throw DomainError("no jet variable " + JetVariable{std::string(base), jetIndex}.name());
  return Polynomial::variable(jet_, *idx);
}

TruncatedSeries::TruncatedSeries(const JetContext& ctx)
    : coefficients_(ctx.order() + 1, Polynomial(ctx.jetRing())) {}

TruncatedSeries::TruncatedSeries(const JetContext& ctx, std::vector<Polynomial> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != ctx.order() + 1)
    throw DomainError("truncated series needs exactly n+1 coefficients");
  for (const auto& c : coefficients_) requireSameRing(ctx.jetRing(), c.ring(), "TruncatedSeries");
}

void TruncatedSeries::requireCompatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.coefficients_.size() != b.coefficients_.size())
    throw DomainError("truncated series of different jet orders");
  requireSameRing(a.ring(), b.ring(), "series arithmetic");
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries::requireCompatible(a, b);
  std::vector<Polynomial> out;
  out.reserve(a.coefficients_.size());
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    out.push_back(a.coefficients_[i] + b.coefficients_[i]);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries::requireCompatible(a, b);
  const std::size_t len = a.coefficients_.size();
  std::vector<Polynomial> out(len, Polynomial(a.ring()));
  for (std::size_t i = 0; i < len; ++i) {
    if (a.coefficients_[i].isZero()) continue;
    for (std::size_t j = 0; i + j < len; ++j)
      if (!b.coefficients_[j].isZero()) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return TruncatedSeries(std::move(out));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.coefficients_ == b.coefficients_;
}

TruncatedSeries seriesMul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries jetLift(const Polynomial& f, const JetContext& ctx) {
  requireSameRing(ctx.baseRing(), f.ring(), "jetLift");
  const auto& jetRing = ctx.jetRing();
  const auto& bases = ctx.baseRing()->variables();
  const unsigned n = ctx.order();

  std::vector<TruncatedSeries> lifts;
  lifts.reserve(bases.size());
  for (const auto& v : bases) {
    std::vector<Polynomial> coeffs;
    for (unsigned i = 0; i <= n; ++i) coeffs.push_back(ctx.jetVariable(v.base, i));
    lifts.emplace_back(ctx, std::move(coeffs));
  }

  std::map<std::pair<std::size_t, std::uint32_t>, TruncatedSeries> powers;
  auto power = [&](std::size_t var, std::uint32_t e) -> const TruncatedSeries& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    TruncatedSeries p = lifts[var];
    for (std::uint32_t k = 1; k < e; ++k) p = p * lifts[var];
    return powers.emplace(key, std::move(p)).first->second;
  };

  TruncatedSeries result(ctx);
  for (const auto& term : f.terms()) {
    std::vector<Polynomial> unit(n + 1, Polynomial(jetRing));
    unit[0] = Polynomial::constant(jetRing, term.coefficient);
    TruncatedSeries product(ctx, std::move(unit));
    for (std::size_t v = 0; v < bases.size(); ++v)
      if (term.monomial[v] > 0) product = product * power(v, term.monomial[v]);
    result = result + product;
  }
  return result;
}

Polynomial hsDerivative(const Polynomial& f, unsigned i, const JetContext& ctx) {
  if (i > ctx.order())
    throw DomainError("hsDerivative: index " + std::to_string(i) + " exceeds jet order " +
                      std::to_string(ctx.order()));
  return jetLift(f, ctx)[i];
}

Ideal jetIdeal(std::span<const Polynomial> relations, const JetContext& ctx) {
  std::vector<Polynomial> gens;
  for (const auto& f : relations) {
    const auto lift = jetLift(f, ctx);
    for (const auto& c : lift.coefficients()) gens.push_back(c);
  }
  return Ideal(ctx.jetRing(), std::move(gens));
}

}  // namespace jetnash
