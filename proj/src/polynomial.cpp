#include "jetnash/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "jetnash/errors.hpp"

namespace jetnash {

namespace {

void sortTerms(std::vector<Term>& terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("polynomial requires a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sortedTerms)
    : ring_(std::move(ring)), terms_(std::move(sortedTerms)) {}

Polynomial Polynomial::constant(RingPtr ring, Coefficient c) {
  c.canonicalize();
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({std::move(c), Monomial(p.ring_->variableCount())});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, std::uint32_t exponent) {
  if (index >= ring->variableCount()) throw DomainError("variable index out of range");
  const auto n = ring->variableCount();
  return Polynomial(std::move(ring), {{Coefficient(1), Monomial::variable(n, index, exponent)}});
}

Polynomial Polynomial::variable(RingPtr ring, const JetVariable& v, std::uint32_t exponent) {
  auto idx = ring->indexOf(v);
  if (!idx) throw DomainError("unknown variable '" + v.name() + "' in " + ring->describe());
  return variable(std::move(ring), *idx, exponent);
}

Polynomial Polynomial::monomial(RingPtr ring, Coefficient c, Monomial m) {
  if (m.size() != ring->variableCount()) throw DomainError("monomial arity mismatch");
  c.canonicalize();
  if (c == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), {{std::move(c), std::move(m)}});
}

Polynomial Polynomial::fromTerms(RingPtr ring, std::vector<Term> terms) {
  const auto n = ring->variableCount();
  for (auto& t : terms) {
    if (t.monomial.size() != n) throw DomainError("monomial arity mismatch");
    t.coefficient.canonicalize();
  }
  sortTerms(terms, ring->order());
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::isConstant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.isOne());
}

bool Polynomial::isUnit() const noexcept { return !terms_.empty() && isConstant(); }

std::uint64_t Polynomial::totalDegree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

const Term& Polynomial::leadingTerm() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coefficient == 1) return *this;
  Coefficient inv = 1 / terms_.front().coefficient;
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient *= inv;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  mpz_class den = 1, num = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coefficient.get_num_mpz_t());
  }
  Coefficient scale(den, num);
  scale.canonicalize();
  if (terms_.front().coefficient < 0) scale = -scale;
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient *= scale;
  return Polynomial(ring_, std::move(out));
}

std::uint32_t Polynomial::degreeIn(std::size_t index) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[index]);
  return d;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient = -t.coefficient;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::subtractMultiple(const Coefficient& c, const Monomial& m,
                                        const Polynomial& g) const {
  requireSameRing(ring_, g.ring_, "subtract");
  const auto& order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool haveGm = false;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size() && !haveGm) {
      gm = g.terms_[j].monomial * m;
      haveGm = true;
    }
    if (j >= g.terms_.size()) {
      out.push_back(terms_[i++]);
      continue;
    }
    auto cmp = i < terms_.size() ? order.compare(terms_[i].monomial, gm)
                                 : std::strong_ordering::less;
    if (cmp == std::strong_ordering::greater) {
      out.push_back(terms_[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({-(c * g.terms_[j].coefficient), std::move(gm)});
      ++j;
      haveGm = false;
    } else {
      Coefficient v = terms_[i].coefficient - c * g.terms_[j].coefficient;
      if (v != 0) out.push_back({std::move(v), std::move(gm)});
      ++i;
      ++j;
      haveGm = false;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::multiplyTerm(const Coefficient& c, const Monomial& m) const {
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.coefficient * c, t.monomial * m});
  // Multiplication by a monomial preserves the order of terms.
  return Polynomial(ring_, std::move(out));
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  requireSameRing(f.ring_, g.ring_, "add");
  return f.subtractMultiple(Coefficient(-1), Monomial(f.ring_->variableCount()), g);
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  requireSameRing(f.ring_, g.ring_, "subtract");
  return f.subtractMultiple(Coefficient(1), Monomial(f.ring_->variableCount()), g);
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  requireSameRing(f.ring_, g.ring_, "mul");
  if (f.isZero() || g.isZero()) return Polynomial(f.ring_);
  const Polynomial& small = f.termCount() <= g.termCount() ? f : g;
  const Polynomial& big = f.termCount() <= g.termCount() ? g : f;
  if (small.termCount() == 1)
    return big.multiplyTerm(small.terms_[0].coefficient, small.terms_[0].monomial);
  std::vector<Term> all;
  all.reserve(f.termCount() * g.termCount());
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) all.push_back({a.coefficient * b.coefficient, a.monomial * b.monomial});
  return Polynomial::fromTerms(f.ring_, std::move(all));
}

Polynomial operator*(const Coefficient& c, const Polynomial& f) {
  return f.multiplyTerm(c, Monomial(f.ring_->variableCount()));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!sameRing(f.ring_, g.ring_) || f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (f.terms_[i].coefficient != g.terms_[i].coefficient ||
        !(f.terms_[i].monomial == g.terms_[i].monomial))
      return false;
  return true;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::mapInto(const RingPtr& target) const {
  if (sameRing(ring_, target)) return Polynomial(target, terms_);
  const auto& vars = ring_->variables();
  std::vector<std::optional<std::size_t>> map(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) map[i] = target->indexOf(vars[i]);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> e(target->variableCount(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!map[i])
        throw DomainError("variable '" + vars[i].name() + "' does not exist in " +
                          target->describe());
      e[*map[i]] = t.monomial[i];
    }
    out.push_back({t.coefficient, Monomial(std::move(e))});
  }
  return fromTerms(target, std::move(out));
}

std::string formatCoefficient(const Coefficient& c) {
  std::ostringstream os;
  os << c.get_num();
  if (c.get_den() != 1) os << "/" << c.get_den();
  return os.str();
}

std::string Polynomial::toString() const {
  if (terms_.empty()) return "0";
  const auto& vars = ring_->variables();
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Coefficient c = t.coefficient;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    c = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i].name();
      if (t.monomial[i] > 1) mono += "^" + std::to_string(t.monomial[i]);
    }
    if (mono.empty()) {
      s += formatCoefficient(c);
    } else if (c == 1) {
      s += mono;
    } else {
      s += formatCoefficient(c) + "*" + mono;
    }
  }
  return s;
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }

std::strong_ordering compareMonomials(const Monomial& u, const Monomial& v,
                                      const MonomialOrder& order) {
  return order.compare(u, v);
}

Polynomial partialDerivative(const Polynomial& f, std::size_t index) {
  if (index >= f.ring()->variableCount()) throw DomainError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const auto e = t.monomial[index];
    if (e == 0) continue;
    out.push_back({t.coefficient * e, t.monomial.withExponent(index, e - 1)});
  }
  return Polynomial::fromTerms(f.ring(), std::move(out));
}

Polynomial partialDerivative(const Polynomial& f, const JetVariable& v) {
  auto idx = f.ring()->indexOf(v);
  if (!idx) throw DomainError("unknown variable '" + v.name() + "'");
  return partialDerivative(f, *idx);
}

Polynomial divideExact(const Polynomial& f, const Polynomial& g) {
  requireSameRing(f.ring(), g.ring(), "divideExact");
  if (g.isZero()) throw DomainError("division by the zero polynomial");
  const auto& lt = g.leadingTerm();
  std::vector<Term> quotient;
  Polynomial rest = f;
  while (!rest.isZero()) {
    const auto& r = rest.leadingTerm();
    if (!lt.monomial.divides(r.monomial)) throw DomainError("inexact polynomial division");
    Coefficient c = r.coefficient / lt.coefficient;
    Monomial m = r.monomial.quotient(lt.monomial);
    rest = rest.subtractMultiple(c, m, g);
    quotient.push_back({std::move(c), std::move(m)});
  }
  // Quotient terms were produced in strictly descending order.
  return Polynomial::fromTerms(f.ring(), std::move(quotient));
}

}  // namespace jetnash
