#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "example1.hpp"
#include "jetnash/errors.hpp"
#include "jetnash/nash.hpp"
#include "jetnash/parse.hpp"
#include "jetnash/random.hpp"

using namespace jetnash;

namespace {

RingPtr plane() { return PolynomialRing::create({"x", "y"}); }
Polynomial P(const char* text, const RingPtr& ring) { return parsePolynomial(text, ring); }

ModulePresentation blowupOfOrigin() {
  auto R = plane();
  return idealBlowupPresentation({P("x", R), P("y", R)});
}

std::map<std::string, Ideal> atomsUpTo(const ModulePresentation& p, int n) {
  std::map<std::string, Ideal> atoms;
  for (int k = 0; k <= n; ++k) atoms.emplace("a_" + std::to_string(k), nashIdeal(p, k).ideal);
  return atoms;
}

PolyMatrix withRedundantColumn(const PolyMatrix& m, const std::vector<Polynomial>& weights) {
  PolyMatrix out(m.ring(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Polynomial extra(m.ring());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out.set(r, c, m.at(r, c));
      extra = extra + weights[c] * m.at(r, c);
    }
    out.set(r, m.cols(), extra);
  }
  return out;
}

}  // namespace

TEST_CASE("ModulePresentation validation") {
  auto R = plane();
  CHECK_THROWS_WITH_AS(ModulePresentation(PolyMatrix(R, 0, 0), 1), "empty matrix", DomainError);
  CHECK_THROWS_AS(ModulePresentation(PolyMatrix::fromRows(R, {{P("x", R), P("y", R)}}), 0), DomainError);
  CHECK_THROWS_WITH_AS(ModulePresentation(PolyMatrix::fromRows(R, {{P("x", R), P("y", R)}}), 2),
                       doctest::Contains("generic rank not attained"), DomainError);
  CHECK_THROWS_WITH_AS(ModulePresentation(PolyMatrix(R, 2, 3), 1),
                       doctest::Contains("generic rank not attained"), DomainError);
  // Nonzero in Q[x,y] but zero in Q[x,y]/(x).
  CHECK_THROWS_AS(ModulePresentation(PolyMatrix::fromRows(R, {{P("x", R), P("2*x", R)}}), 1, {P("x", R)}),
                  DomainError);
  JetContext ctx(R, 1);
  CHECK_THROWS_AS(ModulePresentation(PolyMatrix::identity(ctx.jetRing(), 1), 1), DomainError);
}

TEST_CASE("nashIdeal on the blow-up of the origin") {
  auto p = blowupOfOrigin();
  auto r0 = nashIdeal(p, 0);
  const auto& J0 = r0.context.jetRing();
  CHECK(idealEqual(r0.ideal, Ideal(J0, {P("x", J0), P("y", J0)})));
  CHECK(r0.jetMatrix.rows() == 1);
  CHECK(isZeroIdeal(r0.jetRelations));

  auto r2 = nashIdeal(p, 2);
  CHECK(r2.jetMatrix.rows() == 3);
  CHECK(r2.jetMatrix.cols() == 6);
  CHECK(r2.ideal.generators().size() == 8);

  CHECK_THROWS_AS(nashIdeal(p, -1), DomainError);
  NashOptions capped;
  capped.maxJetOrder = 2;
  CHECK_THROWS_AS(nashIdeal(p, 3, capped), ResourceLimitError);
}

TEST_CASE("published presentations of a_0..a_2 verify") {
  auto p = blowupOfOrigin();
  auto atoms = atomsUpTo(p, 2);
  for (int n = 0; n <= 2; ++n) {
    const auto& an = atoms.at("a_" + std::to_string(n));
    auto expr = IdealExpr::parse(example1::kExample1Printed[n], an.ring());
    auto report = verifyPresentation(an, expr, atoms);
    CHECK_MESSAGE(report.equal, "a_" << n << ": " << report.describe());
  }
}

TEST_CASE("a_3 with the corrected sign verifies; the printed sign does not") {
  auto p = blowupOfOrigin();
  auto atoms = atomsUpTo(p, 3);
  const auto& a3 = atoms.at("a_3");

  auto corrected = verifyPresentation(a3, IdealExpr::parse(example1::kExample1Corrected[3], a3.ring()), atoms);
  CHECK_MESSAGE(corrected.equal, corrected.describe());

  auto printed = verifyPresentation(a3, IdealExpr::parse(example1::kExample1Printed[3], a3.ring()), atoms);
  CHECK_FALSE(printed.equal);
  // The misprinted quartic lies outside a_3, and the true minor it replaces
  // is then missing from the presentation.
  REQUIRE(printed.expectedWitness.has_value());
  CHECK(printed.expectedWitness->totalDegree() == 4);
  CHECK_FALSE(contains(a3, *printed.expectedWitness));
  REQUIRE(printed.computedWitness.has_value());
  CHECK(contains(a3, *printed.computedWitness));
}

TEST_CASE("verification report names the failing direction") {
  auto p = blowupOfOrigin();
  auto atoms = atomsUpTo(p, 1);
  const auto& a1 = atoms.at("a_1");
  auto report = verifyPresentation(a1, IdealExpr::parse("a_0^2", a1.ring()), atoms);
  CHECK_FALSE(report.equal);
  CHECK(report.computedWitness.has_value());
  CHECK_FALSE(report.expectedWitness.has_value());
  CHECK(report.describe().rfind("computed ⊄ expected: witness ", 0) == 0);

  auto ok = verifyPresentation(a1, IdealExpr::parse(example1::kExample1Printed[1], a1.ring()), atoms);
  CHECK(ok.describe() == "equal");

  CHECK_THROWS_AS(IdealExpr::parse("a_7 + (x)", a1.ring()).evaluate(atoms), DomainError);
}

TEST_CASE("IdealExpr grammar") {
  auto R = plane();
  auto e = IdealExpr::parse("a_0*a_2 + a_1^2 + (x*y, y^2)", R);
  CHECK(e.kind() == IdealExpr::Kind::Sum);
  CHECK(e.atoms() == std::vector<std::string>{"a_0", "a_1", "a_2"});
  CHECK(IdealExpr::parse("(x)^2", R).kind() == IdealExpr::Kind::Power);

  auto sq = IdealExpr::parse("(x, y)^2", R).evaluate({});
  CHECK(idealEqual(sq, Ideal(R, {P("x^2", R), P("x*y", R), P("y^2", R)})));

  CHECK_THROWS_AS(IdealExpr::parse("", R), ParseError);
  CHECK_THROWS_AS(IdealExpr::parse("(x, y", R), ParseError);
  CHECK_THROWS_AS(IdealExpr::parse("a_0^0", R), ParseError);
  CHECK_THROWS_AS(IdealExpr::parse("(x, z)", R), ParseError);
  try {
    IdealExpr::parse("a_0 + (x, y) )", R);
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.position() == 13);
  }
}

TEST_CASE("identity presentations give the unit ideal") {
  auto R = plane();
  for (std::size_t r = 1; r <= 2; ++r) {
    ModulePresentation p(PolyMatrix::identity(R, r), r);
    for (int n = 0; n <= (r == 1 ? 4 : 2); ++n) CHECK(isUnitIdeal(nashIdeal(p, n).ideal));
  }
}

TEST_CASE("principal ideals have principal a_n") {
  auto R = plane();
  for (const char* g : {"x", "x*y + 1", "x^2 - y^3"}) {
    auto f = P(g, R);
    auto p = idealBlowupPresentation({f});
    for (int n = 0; n <= 3; ++n) {
      auto res = nashIdeal(p, n);
      auto f0 = res.context.rename(f);
      CHECK(idealEqual(res.ideal, Ideal(res.context.jetRing(), {f0.pow(n + 1)})));
    }
  }
  CHECK_THROWS_AS(idealBlowupPresentation({}), DomainError);
}

TEST_CASE("a_0 is the ideal of rank-size minors") {
  auto R = PolynomialRing::create({"x", "y", "z"});
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t rank = 1 + static_cast<std::size_t>(trial % 2);
    PolyMatrix m(R, rank, 3);
    for (std::size_t r = 0; r < rank; ++r)
      for (std::size_t c = 0; c < 3; ++c) m.set(r, c, randomPolynomial(rng, R, {2, 2, 3}));
    if (!genericRankAtLeast(m, rank)) continue;
    ModulePresentation p(m, rank);
    auto res = nashIdeal(p, 0);
    CHECK(idealEqual(res.ideal, minorsIdeal(m, rank).mapInto(res.context.jetRing())));
  }
}

TEST_CASE("a_n ignores redundant columns and unimodular column changes") {
  auto R = plane();
  std::mt19937_64 rng(88);
  int checked = 0;
  for (int trial = 0; trial < 12 && checked < 6; ++trial) {
    PolyMatrix m(R, 1, 2);
    for (std::size_t c = 0; c < 2; ++c) m.set(0, c, randomPolynomial(rng, R, {2, 2, 3}));
    if (!genericRankAtLeast(m, 1)) continue;
    ++checked;
    auto u = randomUnimodular(rng, R, 2, 1);
    auto aug = withRedundantColumn(m, {randomPolynomial(rng, R, {2, 1, 2}), randomPolynomial(rng, R, {2, 1, 2})});
    for (int n = 0; n <= 2; ++n) {
      auto base = nashIdeal(ModulePresentation(m, 1), n).ideal;
      CHECK(idealEqual(base, nashIdeal(ModulePresentation(m * u, 1), n).ideal));
      CHECK(idealEqual(base, nashIdeal(ModulePresentation(aug, 1), n).ideal));
    }
  }
  CHECK(checked >= 4);
}

TEST_CASE("hypersurface presentations") {
  auto R = plane();
  auto cusp = hypersurfaceNashPresentation(P("y^2 - x^3", R));
  CHECK(cusp.matrix() == PolyMatrix::fromRows(R, {{P("-3*x^2", R), P("2*y", R)}}));
  CHECK(cusp.isQuotient());
  CHECK(cusp.warnings().empty());

  auto line = hypersurfaceNashPresentation(P("x", R));
  for (int n = 0; n <= 2; ++n) CHECK(isUnitIdeal(nashIdeal(line, n).ideal));

  auto doubled = hypersurfaceNashPresentation(P("x^2", R));
  CHECK(doubled.warnings().size() == 1);

  CHECK_THROWS_AS(hypersurfaceNashPresentation(P("3", R)), DomainError);
}

TEST_CASE("main component of the cusp at order 1") {
  auto R = plane();
  auto cusp = hypersurfaceNashPresentation(P("y^2 - x^3", R));
  auto res = nashIdeal(cusp, 1);
  const auto& J = res.context.jetRing();
  auto main = mainComponentIdeal(res.jetRelations, P("y", R), res.context);

  // Frozen from an independent sympy saturation.
  Ideal oracle(J, {P("x^3 - y^2", J), P("3*x^2*x_1 - 2*y*y_1", J), P("9*x*x_1^2 - 4*y_1^2", J),
                   P("2*x*y_1 - 3*x_1*y", J), P("27*x_1^3*y - 8*y_1^3", J)});
  CHECK(idealEqual(main, oracle));
  CHECK_FALSE(contains(res.jetRelations, P("2*x*y_1 - 3*y*x_1", J)));
  CHECK(containsIdeal(main, res.jetRelations));

  CHECK(idealEqual(mainComponentIdeal(main, P("y", R), res.context), main));
  CHECK(idealEqual(mainComponentIdeal(res.jetRelations, P("1", R), res.context), res.jetRelations));
  CHECK(isZeroIdeal(mainComponentIdeal(Ideal::zero(J), P("y", R), res.context)));
  CHECK_THROWS_AS(mainComponentIdeal(res.jetRelations, Polynomial(R), res.context), DomainError);
}
