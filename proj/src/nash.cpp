#include "jetnash/nash.hpp"

#include "jetnash/errors.hpp"

namespace jetnash {

namespace {

bool someMinorNonzero(const PolyMatrix& m, std::size_t r, const std::vector<Polynomial>& relations) {
  if (r > std::min(m.rows(), m.cols())) return false;
  if (relations.empty()) return genericRankAtLeast(m, r);
  const QuotientRing quotient(Ideal(m.ring(), relations));
  for (const auto& cols : combinations(m.cols(), r))
    for (const auto& rows : combinations(m.rows(), r))
      if (!quotient.isZero(determinant(m.submatrix(rows, cols)))) return true;
  return false;
}

}  // namespace

ModulePresentation::ModulePresentation(PolyMatrix matrix, std::size_t rank,
                                       std::vector<Polynomial> relations)
    : matrix_(std::move(matrix)), rank_(rank), relations_(std::move(relations)) {
  if (matrix_.rows() == 0 || matrix_.cols() == 0) throw DomainError("empty matrix");
  if (rank_ == 0) throw DomainError("rank must be positive");
  for (const auto& f : relations_) requireSameRing(matrix_.ring(), f.ring(), "ModulePresentation");
  if (matrix_.ring()->role() != RingRole::Base)
    throw DomainError("module presentation must live over a base ring");
  if (rank_ > matrix_.rows())
    throw DomainError("generic rank not attained: rank " + std::to_string(rank_) + " exceeds " +
                      std::to_string(matrix_.rows()) + " row(s)");
  if (!someMinorNonzero(matrix_, rank_, relations_))
    throw DomainError("generic rank not attained: every " + std::to_string(rank_) + "x" +
                      std::to_string(rank_) + " minor vanishes");
}

NashJetResult nashIdeal(const ModulePresentation& p, int n, const NashOptions& options) {
  if (n < 0) throw DomainError("jet order must be non-negative");
  if (static_cast<unsigned>(n) > options.maxJetOrder)
    throw ResourceLimitError("jet order " + std::to_string(n) + " exceeds the cap of " +
                             std::to_string(options.maxJetOrder));
  const auto order = static_cast<unsigned>(n);
  JetContext ctx(p.ring(), order);
  PolyMatrix jetMatrix = buildJetMatrix(p.matrix(), ctx);
  Ideal ideal = minorsIdeal(jetMatrix, (order + 1) * p.rank(), options.minors);
  Ideal relations = jetIdeal(p.relations(), ctx);
  return NashJetResult{order, std::move(ctx), std::move(jetMatrix), std::move(ideal),
                       std::move(relations)};
}

ModulePresentation idealBlowupPresentation(std::vector<Polynomial> generators) {
  if (generators.empty()) throw DomainError("idealBlowupPresentation: empty generator list");
  RingPtr ring = generators.front().ring();
  return ModulePresentation(PolyMatrix::fromRows(ring, {std::move(generators)}), 1);
}

ModulePresentation hypersurfaceNashPresentation(const Polynomial& f) {
  if (f.isConstant()) throw DomainError("hypersurfaceNashPresentation: f is constant");
  const RingPtr& ring = f.ring();
  std::vector<Polynomial> row;
  for (std::size_t v = 0; v < ring->variableCount(); ++v) row.push_back(partialDerivative(f, v));

  const Ideal principal(ring, {f});
  bool reducedLooking = false;
  for (const auto& d : row)
    if (!d.isZero() && !isUnitIdeal(saturate(principal, d))) reducedLooking = true;

  ModulePresentation p(PolyMatrix::fromRows(ring, {std::move(row)}), 1, {f});
  if (!reducedLooking)
    p.addWarning("every partial derivative of " + f.toString() +
                 " is nilpotent modulo f; the input is probably not reduced");
  return p;
}

Ideal mainComponentIdeal(const Ideal& jetRelations, const Polynomial& smoothWitness,
                         const JetContext& ctx) {
  if (smoothWitness.isZero()) throw DomainError("mainComponentIdeal: zero witness");
  requireSameRing(ctx.jetRing(), jetRelations.ring(), "mainComponentIdeal");
  return saturate(jetRelations, ctx.rename(smoothWitness));
}

std::string VerificationReport::describe() const {
  if (equal) return "equal";
  std::string s;
  if (computedWitness) s += "computed ⊄ expected: witness " + computedWitness->toString();
  if (expectedWitness) {
    if (!s.empty()) s += "; ";
    s += "expected ⊄ computed: witness " + expectedWitness->toString();
  }
  return s;
}

VerificationReport verifyPresentation(const Ideal& computed, const IdealExpr& expected,
                                      const std::map<std::string, Ideal>& atoms) {
  const Ideal target = expected.evaluate(atoms);
  requireSameRing(computed.ring(), target.ring(), "verifyPresentation");
  VerificationReport report;
  report.computedWitness = firstNonMember(target, computed);
  report.expectedWitness = firstNonMember(computed, target);
  report.equal = !report.computedWitness && !report.expectedWitness;
  return report;
}

}  // namespace jetnash
