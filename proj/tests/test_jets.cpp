#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "jetnash/errors.hpp"
#include "jetnash/jets.hpp"
#include "jetnash/parse.hpp"
#include "jetnash/random.hpp"

using namespace jetnash;

namespace {

RingPtr plane() { return PolynomialRing::create({"x", "y"}); }
Polynomial P(const char* text, const RingPtr& ring) { return parsePolynomial(text, ring); }

}  // namespace

TEST_CASE("JetContext layout") {
  JetContext ctx(plane(), 2);
  const auto& vars = ctx.jetRing()->variables();
  REQUIRE(vars.size() == 6);
  CHECK(vars[0].name() == "x");
  CHECK(vars[1].name() == "x_1");
  CHECK(vars[2].name() == "x_2");
  CHECK(vars[3].name() == "y");
  CHECK(vars[5].name() == "y_2");
  CHECK(ctx.jetRing()->role() == RingRole::Jet);
  CHECK_THROWS_AS(JetContext(ctx.jetRing(), 1), DomainError);
}

TEST_CASE("jetLift") {
  auto R = plane();
  JetContext ctx(R, 2);
  const auto& J = ctx.jetRing();

  auto lx = jetLift(P("x", R), ctx);
  CHECK(lx[0] == P("x", J));
  CHECK(lx[1] == P("x_1", J));
  CHECK(lx[2] == P("x_2", J));

  auto lc = jetLift(P("5/2", R), ctx);
  CHECK(lc[0] == P("5/2", J));
  CHECK(lc[1].isZero());
  CHECK(lc[2].isZero());

  // (x + x_1 t + x_2 t^2)(y + y_1 t + y_2 t^2) mod t^3, by hand.
  auto lxy = jetLift(P("x*y", R), ctx);
  CHECK(lxy[0] == P("x*y", J));
  CHECK(lxy[1] == P("x_1*y + x*y_1", J));
  CHECK(lxy[2] == P("x_2*y + x_1*y_1 + x*y_2", J));

  CHECK_THROWS_AS(jetLift(P("x", J), ctx), RingMismatchError);
}

TEST_CASE("hsDerivative") {
  auto R = plane();
  JetContext ctx(R, 3);
  const auto& J = ctx.jetRing();
  CHECK(hsDerivative(P("x", R), 1, ctx) == P("x_1", J));
  CHECK(hsDerivative(P("7", R), 3, ctx).isZero());
  CHECK(hsDerivative(P("x*y", R), 2, ctx) == P("x_2*y + x_1*y_1 + x*y_2", J));
  // D_1(x^2) = 2 x x_1, D_2(x^2) = x_1^2 + 2 x x_2, D_3(x^3) by hand.
  CHECK(hsDerivative(P("x^2", R), 1, ctx) == P("2*x*x_1", J));
  CHECK(hsDerivative(P("x^2", R), 2, ctx) == P("x_1^2 + 2*x*x_2", J));
  CHECK(hsDerivative(P("x^3", R), 3, ctx) == P("x_1^3 + 6*x*x_1*x_2 + 3*x^2*x_3", J));
  CHECK_THROWS_AS(hsDerivative(P("x", R), 4, ctx), DomainError);
}

TEST_CASE("jetIdeal") {
  auto R = plane();
  JetContext ctx1(R, 1);
  CHECK(isZeroIdeal(jetIdeal({}, ctx1)));

  auto cusp = P("y^2 - x^3", R);
  auto j1 = jetIdeal(std::vector{cusp}, ctx1);
  REQUIRE(j1.generators().size() == 2);
  CHECK(j1.generators()[0] == P("y^2 - x^3", ctx1.jetRing()));
  CHECK(j1.generators()[1] == P("2*y*y_1 - 3*x^2*x_1", ctx1.jetRing()));

  JetContext ctx0(R, 0);
  auto j0 = jetIdeal(std::vector{cusp}, ctx0);
  CHECK(j0.generators() == std::vector{ctx0.rename(cusp)});
}

TEST_CASE("seriesMul") {
  auto R = plane();
  JetContext ctx(R, 1);
  const auto& J = ctx.jetRing();
  TruncatedSeries a(ctx, {P("1", J), P("1", J)});
  TruncatedSeries b(ctx, {P("1", J), P("-1", J)});
  auto ab = seriesMul(a, b);
  CHECK(ab[0] == P("1", J));
  CHECK(ab[1].isZero());

  TruncatedSeries u(ctx, {P("x", J), P("x_1", J)});
  TruncatedSeries v(ctx, {P("y", J), P("y_1", J)});
  auto uv = seriesMul(u, v);
  CHECK(uv[0] == P("x*y", J));
  CHECK(uv[1] == P("x*y_1 + x_1*y", J));

  JetContext other(R, 2);
  CHECK_THROWS_AS(seriesMul(a, TruncatedSeries(other)), DomainError);
  CHECK_THROWS_AS(TruncatedSeries(ctx, {P("1", J)}), DomainError);
}

TEST_CASE("Leibniz rule and additivity") {
  auto R = PolynomialRing::create({"x", "y", "z"});
  std::mt19937_64 rng(1);
  RandomPolynomialShape shape{4, 4, 5, true};
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = static_cast<unsigned>(trial % 5);
    JetContext ctx(R, n);
    auto f = randomPolynomial(rng, R, shape), g = randomPolynomial(rng, R, shape);
    for (unsigned k = 0; k <= n; ++k) {
      Polynomial sum(ctx.jetRing());
      for (unsigned i = 0; i <= k; ++i) sum += hsDerivative(f, i, ctx) * hsDerivative(g, k - i, ctx);
      CHECK(hsDerivative(f * g, k, ctx) == sum);
      CHECK(hsDerivative(f + g, k, ctx) == hsDerivative(f, k, ctx) + hsDerivative(g, k, ctx));
    }
  }
}

TEST_CASE("jetLift is a ring homomorphism") {
  auto R = PolynomialRing::create({"x", "y", "z"});
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    JetContext ctx(R, static_cast<unsigned>(trial % 4));
    auto f = randomPolynomial(rng, R), g = randomPolynomial(rng, R);
    CHECK(jetLift(f * g, ctx) == seriesMul(jetLift(f, ctx), jetLift(g, ctx)));
    CHECK(jetLift(f + g, ctx) == jetLift(f, ctx) + jetLift(g, ctx));
  }
}

TEST_CASE("truncation consistency across jet orders") {
  auto R = PolynomialRing::create({"x", "y"});
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = randomPolynomial(rng, R);
    JetContext small(R, 2), large(R, 4);
    for (unsigned i = 0; i <= 2; ++i)
      CHECK(hsDerivative(f, i, small).mapInto(large.jetRing()) == hsDerivative(f, i, large));
  }
}

TEST_CASE("D_0 is a ring isomorphism onto the jet-index-0 subring") {
  auto R = PolynomialRing::create({"x", "y", "z"});
  JetContext ctx(R, 2);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = randomPolynomial(rng, R), g = randomPolynomial(rng, R);
    auto d0 = hsDerivative(f, 0, ctx);
    CHECK(d0 == ctx.rename(f));
    CHECK(hsDerivative(f * g, 0, ctx) == d0 * ctx.rename(g));
    for (const auto& t : d0.terms())
      for (std::size_t v = 0; v < ctx.jetRing()->variableCount(); ++v)
        if (ctx.jetRing()->variables()[v].jetIndex > 0) CHECK(t.monomial[v] == 0);
    // inverse renaming recovers f
    CHECK(d0.mapInto(R) == f);
  }
}
