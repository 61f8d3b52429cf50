#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "jetnash/errors.hpp"
#include "jetnash/parse.hpp"
#include "jetnash/polynomial.hpp"
#include "jetnash/random.hpp"

using namespace jetnash;

namespace {

RingPtr plane() { return PolynomialRing::create({"x", "y"}); }
RingPtr jetPlane(unsigned n) { return PolynomialRing::create({"x", "y"}, n, MonomialOrder::degrevlex(), RingRole::Jet); }

Polynomial P(const char* text, const RingPtr& ring) { return parsePolynomial(text, ring); }

}  // namespace

TEST_CASE("add") {
  auto R = plane();
  CHECK(P("x + y", R) + P("x - y", R) == P("2*x", R));
  CHECK(P("x^2 - 3*y", R) + Polynomial(R) == P("x^2 - 3*y", R));

  auto J = jetPlane(1);
  CHECK(P("x*y_1 - y*x_1", J) + P("y*x_1", J) == P("x*y_1", J));
  CHECK((P("x", R) - P("x", R)).isZero());
}

TEST_CASE("mul") {
  auto R = plane();
  CHECK(P("x", R) * P("y", R) == P("x*y", R));
  CHECK(P("x + y", R) * P("x - y", R) == P("x^2 - y^2", R));

  // (x, y)·(x, y): the generators of a_0^2 as term data.
  std::vector<Polynomial> products;
  for (const char* a : {"x", "y"})
    for (const char* b : {"x", "y"}) products.push_back(P(a, R) * P(b, R));
  CHECK(products[0] == P("x^2", R));
  CHECK(products[1] == P("x*y", R));
  CHECK(products[2] == products[1]);
  CHECK(products[3] == P("y^2", R));
}

TEST_CASE("operations across rings are rejected") {
  auto R = plane();
  auto J = jetPlane(0);
  CHECK_THROWS_AS(P("x", R) + P("x", J), RingMismatchError);
  CHECK_THROWS_AS(P("x", R) * P("x", J), RingMismatchError);
}

TEST_CASE("compareMonomials") {
  const auto drl = MonomialOrder::degrevlex();
  const auto x2 = Monomial({2, 0}), xy = Monomial({1, 1}), one = Monomial(2);
  const auto x = Monomial({1, 0}), y3 = Monomial({0, 3});
  CHECK(compareMonomials(x2, xy, drl) == std::strong_ordering::greater);
  CHECK(compareMonomials(one, x, drl) == std::strong_ordering::less);
  CHECK(compareMonomials(one, x, MonomialOrder::lex()) == std::strong_ordering::less);
  CHECK(compareMonomials(y3, x, MonomialOrder::lex()) == std::strong_ordering::less);
  CHECK(compareMonomials(y3, x, drl) == std::strong_ordering::greater);

  // degrevlex differs from deglex: x*z^2 vs y^3 in three variables.
  CHECK(drl.compare(Monomial({1, 1, 1}), Monomial({0, 3, 0})) == std::strong_ordering::less);
  CHECK(drl.compare(Monomial({2, 0, 1}), Monomial({1, 2, 0})) == std::strong_ordering::less);

  // block elimination: anything with the first block beats everything without.
  const auto block = MonomialOrder::blockElimination(1);
  CHECK(block.compare(Monomial({1, 0, 0}), Monomial({0, 5, 5})) == std::strong_ordering::greater);
}

TEST_CASE("monomial order is a multiplicative strict total order") {
  std::mt19937_64 rng(11);
  for (auto order : {MonomialOrder::degrevlex(), MonomialOrder::lex(), MonomialOrder::blockElimination(2)}) {
    for (int i = 0; i < 300; ++i) {
      auto u = randomMonomial(rng, 5, 4), v = randomMonomial(rng, 5, 4), w = randomMonomial(rng, 5, 4);
      const auto uv = order.compare(u, v);
      CHECK(order.compare(v, u) == (0 <=> uv));
      CHECK((uv == 0) == (u == v));
      if (uv < 0 && order.compare(v, w) < 0) CHECK(order.compare(u, w) < 0);
      if (uv < 0) CHECK(order.compare(u * w, v * w) < 0);
      CHECK(order.compare(Monomial(5), u * w) <= 0);
    }
  }
}

TEST_CASE("partialDerivative") {
  auto R = plane();
  auto cusp = P("y^2 - x^3", R);
  CHECK(partialDerivative(cusp, 0) == P("-3*x^2", R));
  CHECK(partialDerivative(cusp, JetVariable{"y", 0}) == P("2*y", R));
  CHECK(partialDerivative(P("7/3", R), 0).isZero());
  CHECK_THROWS_AS(partialDerivative(cusp, JetVariable{"z", 0}), DomainError);
}

TEST_CASE("partialDerivative satisfies the product rule") {
  auto R = PolynomialRing::create({"a", "b", "c"});
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto f = randomPolynomial(rng, R), g = randomPolynomial(rng, R);
    for (std::size_t v = 0; v < 3; ++v)
      CHECK(partialDerivative(f * g, v) == partialDerivative(f, v) * g + f * partialDerivative(g, v));
  }
}

TEST_CASE("parsePolynomial") {
  auto J = jetPlane(1);
  auto p = P("x*y_1 - y*x_1", J);
  CHECK(p.termCount() == 2);
  CHECK(p == Polynomial::variable(J, JetVariable{"x", 0}) * Polynomial::variable(J, JetVariable{"y", 1}) -
                 Polynomial::variable(J, JetVariable{"y", 0}) * Polynomial::variable(J, JetVariable{"x", 1}));
  CHECK(P("0", J).isZero());

  auto R = plane();
  auto q = P("3/2*x^2", R);
  REQUIRE(q.termCount() == 1);
  CHECK(q.leadingCoefficient() == Coefficient(3, 2));
  CHECK(q.leadingMonomial() == Monomial({2, 0}));

  CHECK(P(" ( x + 1 ) ^ 2 ", R) == P("x^2 + 2*x + 1", R));
  CHECK(P("-x - -y", R) == P("y - x", R));
  CHECK(P("6/4", R) == P("3/2", R));
  CHECK(P("x_0", J) == P("x", J));
}

TEST_CASE("parsePolynomial errors carry positions") {
  auto R = plane();
  auto failsAt = [&](const char* text, std::size_t position) {
    try {
      (void)parsePolynomial(text, R);
      FAIL("expected a parse error for " << text);
    } catch (const ParseError& e) {
      CHECK(e.position() == position);
    }
  };
  failsAt("2x", 1);       // implicit multiplication
  failsAt("x + ", 4);
  failsAt("x*y_1", 2);    // no jet variables in the base ring
  failsAt("z", 0);        // unknown variable
  failsAt("x^0", 2);
  failsAt("(x + y", 6);
  failsAt("1/0", 2);
  failsAt("", 0);
  failsAt("x y", 2);
}

TEST_CASE("rendering is canonical") {
  auto J = jetPlane(1);
  CHECK(P("x*y_1 - y*x_1", J).toString() == "-x_1*y + x*y_1");
  CHECK(P("3/2*x^2 - 1", plane()).toString() == "3/2*x^2 - 1");
  CHECK(P("-1/3", plane()).toString() == "-1/3");
  CHECK(Polynomial(plane()).toString() == "0");
}

TEST_CASE("ring axioms on random polynomials") {
  auto R = PolynomialRing::create({"a", "b", "c", "d", "e", "f"});
  std::mt19937_64 rng(2024);
  RandomPolynomialShape shape{4, 4, 6, true};
  for (int i = 0; i < 200; ++i) {
    auto f = randomPolynomial(rng, R, shape), g = randomPolynomial(rng, R, shape), h = randomPolynomial(rng, R, shape);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("normalization is idempotent and parse inverts render") {
  auto R = PolynomialRing::create({"a", "b", "c"}, 2);
  std::mt19937_64 rng(99);
  RandomPolynomialShape shape{6, 4, 9, true};
  for (int i = 0; i < 200; ++i) {
    auto f = randomPolynomial(rng, R, shape) * randomPolynomial(rng, R, shape);
    CHECK(Polynomial::fromTerms(R, f.terms()) == f);
    for (std::size_t k = 1; k < f.termCount(); ++k)
      CHECK(R->order().greater(f.terms()[k - 1].monomial, f.terms()[k].monomial));
    for (const auto& t : f.terms()) {
      CHECK(t.coefficient != 0);
      CHECK(t.coefficient.get_den() > 0);
    }
    CHECK(parsePolynomial(f.toString(), R) == f);
  }
}

TEST_CASE("divideExact") {
  auto R = plane();
  CHECK(divideExact(P("x^2 - y^2", R), P("x - y", R)) == P("x + y", R));
  CHECK_THROWS_AS(divideExact(P("x^2 + 1", R), P("x - y", R)), DomainError);
  CHECK_THROWS_AS(divideExact(P("x", R), Polynomial(R)), DomainError);
}

TEST_CASE("mapInto follows variable names") {
  auto J1 = jetPlane(1), J3 = jetPlane(3);
  auto f = P("x*y_1 - y*x_1", J1);
  CHECK(f.mapInto(J3).mapInto(J1) == f);
  CHECK_THROWS_AS(P("x_3", J3).mapInto(J1), DomainError);
}
