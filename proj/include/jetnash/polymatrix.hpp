#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jetnash/groebner.hpp"
#include "jetnash/jets.hpp"
#include "jetnash/polynomial.hpp"

namespace jetnash {

/// Dense row-major matrix of polynomials over a common ring.
class PolyMatrix {
 public:
  /// rows x cols zero matrix.
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  static PolyMatrix fromRows(RingPtr ring, std::vector<std::vector<Polynomial>> rows);
  static PolyMatrix identity(RingPtr ring, std::size_t size);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool isSquare() const noexcept { return rows_ == cols_; }

  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
  void set(std::size_t r, std::size_t c, Polynomial value);

  PolyMatrix submatrix(std::span<const std::size_t> rowIndices,
                       std::span<const std::size_t> colIndices) const;
  PolyMatrix mapInto(const RingPtr& target) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// M_n: (n+1)r x (n+1)s block lower-triangular matrix whose (i, j) block is
/// D_{i-j}(M) for i >= j and zero above the diagonal. Entries live in the
/// jet ring of `ctx`.
PolyMatrix buildJetMatrix(const PolyMatrix& m, const JetContext& ctx);

/// Exact determinant by Laplace expansion along rows, memoized on the set of
/// remaining columns. Sizes above 12 fall back to determinantBareiss.
Polynomial determinant(const PolyMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination. Every division
/// is exact, so intermediate entries stay polynomial.
Polynomial determinantBareiss(const PolyMatrix& m);

struct MinorOptions {
  bool interreduce = true;
  unsigned threads = 1;
  std::size_t maxMinorSize = 16;
  GroebnerLimits groebner;
};

/// All nonzero k x k minors, syntactically deduplicated, in enumeration
/// order: column subsets lexicographically, row subsets lexicographically
/// within each.
std::vector<Polynomial> rawMinors(const PolyMatrix& m, std::size_t k, const MinorOptions& options = {});

/// Ideal of k x k minors (interreduced unless disabled).
Ideal minorsIdeal(const PolyMatrix& m, std::size_t k, const MinorOptions& options = {});

/// Some r x r minor is a nonzero polynomial.
bool genericRankAtLeast(const PolyMatrix& m, std::size_t r);

/// Index subsets of {0..n-1} of size k in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace jetnash
