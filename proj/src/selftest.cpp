#include "jetnash/selftest.hpp"

#include <random>
#include <sstream>

#include "jetnash/example1_data.hpp"
#include "jetnash/jets.hpp"
#include "jetnash/polymatrix.hpp"
#include "jetnash/problem.hpp"
#include "jetnash/random.hpp"

namespace jetnash {

bool SelfTestReport::ok() const {
  for (const auto& s : suites)
    if (s.failed > 0) return false;
  return true;
}

std::string SelfTestReport::render() const {
  std::ostringstream os;
  os << "seed " << seed << "\n";
  for (const auto& s : suites) {
    os << (s.failed ? "FAIL " : "PASS ") << s.name << ": " << s.passed << " passed, " << s.failed
       << " failed\n";
    for (const auto& f : s.failures) os << "  " << f << "\n";
  }
  os << (ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

const char* bundledGoldenProblem() { return detail::kExample1Json; }

namespace {

template <typename Check>
void record(SuiteResult& suite, bool ok, Check describe) {
  if (ok) {
    ++suite.passed;
  } else {
    ++suite.failed;
    if (suite.failures.size() < 5) suite.failures.push_back(describe());
  }
}

SuiteResult goldenSuite(const std::string& json) {
  SuiteResult suite{"golden"};
  try {
    const ProblemSpec spec = parseProblemSpec(json);
    const ResultDocument doc = runCompute(spec);
    for (const auto& o : doc.orders) {
      if (!o.verification) continue;
      record(suite, o.verification->equal,
             [&] { return "FAIL a_" + std::to_string(o.jetOrder) + ": " + o.verification->report; });
    }
    if (suite.passed + suite.failed == 0) record(suite, false, [] { return std::string("no expected presentations"); });
  } catch (const std::exception& e) {
    record(suite, false, [&] { return std::string("golden problem rejected: ") + e.what(); });
  }
  return suite;
}

SuiteResult ringAxiomSuite(std::mt19937_64& rng) {
  SuiteResult suite{"ring axioms"};
  auto ring = PolynomialRing::create({"a", "b", "c", "d"});
  RandomPolynomialShape shape{4, 3, 5, true};
  for (int i = 0; i < 60; ++i) {
    auto f = randomPolynomial(rng, ring, shape);
    auto g = randomPolynomial(rng, ring, shape);
    auto h = randomPolynomial(rng, ring, shape);
    record(suite, (f * g) * h == f * (g * h) && f * g == g * f && f * (g + h) == f * g + f * h &&
                      (f + g) - g == f,
           [&] { return "axiom failure on f = " + f.toString(); });
  }
  return suite;
}

SuiteResult leibnizSuite(std::mt19937_64& rng) {
  SuiteResult suite{"Hasse-Schmidt Leibniz rule"};
  auto base = PolynomialRing::create({"x", "y", "z"});
  RandomPolynomialShape shape{3, 3, 4, false};
  std::uniform_int_distribution<unsigned> orderDist(0, 3);
  for (int i = 0; i < 40; ++i) {
    const JetContext ctx(base, orderDist(rng));
    auto f = randomPolynomial(rng, base, shape);
    auto g = randomPolynomial(rng, base, shape);
    const auto lf = jetLift(f, ctx), lg = jetLift(g, ctx), lfg = jetLift(f * g, ctx);
    record(suite, lfg == lf * lg && jetLift(f + g, ctx) == lf + lg,
           [&] { return "homomorphism failure on f = " + f.toString() + ", g = " + g.toString(); });
  }
  return suite;
}

SuiteResult determinantSuite(std::mt19937_64& rng) {
  SuiteResult suite{"determinant routes"};
  auto ring = PolynomialRing::create({"x", "y"});
  RandomPolynomialShape shape{2, 1, 3, false};
  std::uniform_int_distribution<std::size_t> sizeDist(1, 4);
  for (int i = 0; i < 25; ++i) {
    const std::size_t n = sizeDist(rng);
    PolyMatrix m(ring, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, randomPolynomial(rng, ring, shape));
    record(suite, determinant(m) == determinantBareiss(m),
           [&] { return "Laplace and Bareiss disagree on a " + std::to_string(n) + "x" + std::to_string(n) + " matrix"; });
  }
  return suite;
}

SuiteResult groebnerSuite(std::mt19937_64& rng) {
  SuiteResult suite{"Groebner self-consistency"};
  auto ring = PolynomialRing::create({"x", "y", "z"});
  RandomPolynomialShape shape{3, 2, 3, false};
  for (int i = 0; i < 15; ++i) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(randomPolynomial(rng, ring, shape));
    const auto basis = buchberger(gens);
    bool ok = isGroebnerBasis(basis);
    for (const auto& g : gens) ok = ok && normalForm(g, basis).isZero();
    record(suite, ok, [&] { return "basis check failed for generators starting " + gens.front().toString(); });
  }
  return suite;
}

}  // namespace

SelfTestReport runSelfTest(std::uint64_t seed, const std::optional<std::string>& goldenJson) {
  SelfTestReport report;
  report.seed = seed;
  report.suites.push_back(goldenSuite(goldenJson ? *goldenJson : std::string(bundledGoldenProblem())));
  std::mt19937_64 rng(seed);
  auto guarded = [&](auto suiteFn) {
    try {
      report.suites.push_back(suiteFn(rng));
    } catch (const std::exception& e) {
      SuiteResult s{"internal error"};
      s.failed = 1;
      s.failures.push_back(e.what());
      report.suites.push_back(std::move(s));
    }
  };
  guarded(ringAxiomSuite);
  guarded(leibnizSuite);
  guarded(determinantSuite);
  guarded(groebnerSuite);
  return report;
}

}  // namespace jetnash
