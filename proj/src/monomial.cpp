#include "jetnash/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace jetnash {

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0})) {}

Monomial Monomial::variable(std::size_t variableCount, std::size_t index,
                            std::uint32_t exponent) {
  Monomial m(variableCount);
  m.exponents_[index] = exponent;
  m.degree_ = exponent;
  return m;
}

Monomial Monomial::withExponent(std::size_t i, std::uint32_t e) const {
  Monomial m = *this;
  m.degree_ = m.degree_ - m.exponents_[i] + e;
  m.exponents_[i] = e;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  Monomial m = a;
  for (std::size_t i = 0; i < b.exponents_.size(); ++i) m.exponents_[i] += b.exponents_[i];
  m.degree_ += b.degree_;
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  assert(divisor.divides(*this));
  Monomial m = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) m.exponents_[i] -= divisor.exponents_[i];
  m.degree_ -= divisor.degree_;
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponents_[i], b.exponents_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.exponents_.size(); ++i)
    if (a.exponents_[i] != 0 && b.exponents_[i] != 0) return false;
  return true;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : exponents_) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

// Degree-reverse-lexicographic comparison restricted to variables [lo, hi).
std::strong_ordering degrevlexRange(const Monomial& u, const Monomial& v, std::size_t lo,
                                    std::size_t hi) {
  std::uint64_t du = 0, dv = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    du += u[i];
    dv += v[i];
  }
  if (du != dv) return du <=> dv;
  for (std::size_t i = hi; i > lo; --i) {
    if (u[i - 1] != v[i - 1]) return v[i - 1] <=> u[i - 1];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  assert(u.size() == v.size());
  const std::size_t n = u.size();
  switch (kind_) {
    case Kind::Degrevlex:
      if (u.degree() != v.degree()) return u.degree() <=> v.degree();
      return degrevlexRange(u, v, 0, n);
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (u[i] != v[i]) return u[i] <=> v[i];
      return std::strong_ordering::equal;
    case Kind::BlockElimination: {
      const std::size_t split = std::min(split_, n);
      if (auto c = degrevlexRange(u, v, 0, split); c != 0) return c;
      return degrevlexRange(u, v, split, n);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Degrevlex: return "degrevlex";
    case Kind::Lex: return "lex";
    case Kind::BlockElimination: return "block-elimination(" + std::to_string(split_) + ")";
  }
  return "?";
}

}  // namespace jetnash
