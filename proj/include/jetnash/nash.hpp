#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetnash/groebner.hpp"
#include "jetnash/jets.hpp"
#include "jetnash/polymatrix.hpp"

namespace jetnash {

/// A torsion-free module F of rank r, given as the image of an r x s matrix
/// over R = Q[x...]/(relations). An empty relation list means R is the
/// polynomial ring itself.
class ModulePresentation {
 public:
  /// Validates the shape and that some rank x rank minor is nonzero in R.
  /// Throws DomainError("empty matrix") or DomainError("generic rank not attained ...").
  ModulePresentation(PolyMatrix matrix, std::size_t rank, std::vector<Polynomial> relations = {});

  const RingPtr& ring() const noexcept { return matrix_.ring(); }
  const PolyMatrix& matrix() const noexcept { return matrix_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  bool isQuotient() const noexcept { return !relations_.empty(); }

  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  void addWarning(std::string w) { warnings_.push_back(std::move(w)); }

 private:
  PolyMatrix matrix_;
  std::size_t rank_;
  std::vector<Polynomial> relations_;
  std::vector<std::string> warnings_;
};

struct NashOptions {
  MinorOptions minors;
  unsigned maxJetOrder = 8;
};

struct NashJetResult {
  unsigned jetOrder;
  JetContext context;
  PolyMatrix jetMatrix;  ///< M_n
  Ideal ideal;           ///< a_n, in the jet ring of the ambient affine space
  Ideal jetRelations;    ///< D_i of the ambient relations (zero ideal if none)
};

/// a_n: the ideal of (n+1)r x (n+1)r minors of the jet matrix M_n.
NashJetResult nashIdeal(const ModulePresentation& p, int n, const NashOptions& options = {});

/// The blow-up of an ideal as a Nash transformation: the 1 x s row of its
/// generators, rank 1.
ModulePresentation idealBlowupPresentation(std::vector<Polynomial> generators);

/// Jacobian row of a hypersurface f, over Q[x...]/(f), rank 1. Flags a
/// warning when every partial derivative is nilpotent modulo f, which
/// happens for non-reduced input such as x^2.
ModulePresentation hypersurfaceNashPresentation(const Polynomial& f);

/// Closure of the jets through the locus where `smoothWitness` does not
/// vanish: (jetRelations : D_0(witness)^infinity).
Ideal mainComponentIdeal(const Ideal& jetRelations, const Polynomial& smoothWitness,
                         const JetContext& ctx);

/// Ideal presentation such as "a_0*a_2 + a_1^2 + (x*y_1 - y*x_1, x^2)".
/// Atoms are names bound at evaluation time; parenthesized groups are
/// comma-separated generator lists in the target ring.
class IdealExpr {
 public:
  enum class Kind { Atom, Generators, Sum, Product, Power };

  static IdealExpr parse(std::string_view text, const RingPtr& ring);

  Kind kind() const noexcept { return kind_; }
  const std::string& text() const noexcept { return text_; }

  /// Throws DomainError for an atom missing from `atoms`.
  Ideal evaluate(const std::map<std::string, Ideal>& atoms) const;

  /// Atom names referenced anywhere in the expression.
  std::vector<std::string> atoms() const;

 private:
  friend class IdealExprParser;
  IdealExpr(Kind kind, RingPtr ring) : kind_(kind), ring_(std::move(ring)) {}

  Kind kind_;
  RingPtr ring_;
  std::string text_;
  std::string atom_;
  std::vector<Polynomial> generators_;
  std::vector<IdealExpr> children_;
  unsigned exponent_ = 1;
};

struct VerificationReport {
  bool equal = false;
  /// Generator of the computed ideal outside the expected one.
  std::optional<Polynomial> computedWitness;
  /// Generator of the expected ideal outside the computed one.
  std::optional<Polynomial> expectedWitness;

  std::string describe() const;
};

/// Evaluates `expected` and certifies equality with `computed` by mutual
/// Groebner membership, naming a witness for each failing direction.
VerificationReport verifyPresentation(const Ideal& computed, const IdealExpr& expected,
                                      const std::map<std::string, Ideal>& atoms);

}  // namespace jetnash
