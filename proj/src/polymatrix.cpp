#include "jetnash/polymatrix.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>
#include <unordered_map>

#include "jetnash/errors.hpp"

namespace jetnash {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (!ring_) throw DomainError("matrix requires a ring");
  entries_.assign(rows * cols, Polynomial(ring_));
}

PolyMatrix PolyMatrix::fromRows(RingPtr ring, std::vector<std::vector<Polynomial>> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(std::move(ring), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, std::move(rows[r][c]));
  }
  return m;
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t size) {
  PolyMatrix m(ring, size, size);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i, Polynomial::constant(ring, 1));
  return m;
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial value) {
  requireSameRing(ring_, value.ring(), "PolyMatrix");
  entries_.at(r * cols_ + c) = std::move(value);
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rowIndices,
                                 std::span<const std::size_t> colIndices) const {
  PolyMatrix m(ring_, rowIndices.size(), colIndices.size());
  for (std::size_t r = 0; r < rowIndices.size(); ++r)
    for (std::size_t c = 0; c < colIndices.size(); ++c)
      m.entries_[r * m.cols_ + c] = at(rowIndices[r], colIndices[c]);
  return m;
}

PolyMatrix PolyMatrix::mapInto(const RingPtr& target) const {
  PolyMatrix m(target, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i].mapInto(target);
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  requireSameRing(a.ring_, b.ring_, "matrix product");
  if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
  PolyMatrix m(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial s(a.ring_);
      for (std::size_t k = 0; k < a.cols_; ++k) s += a.at(i, k) * b.at(k, j);
      m.entries_[i * m.cols_ + j] = std::move(s);
    }
  return m;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return sameRing(a.ring_, b.ring_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

PolyMatrix buildJetMatrix(const PolyMatrix& m, const JetContext& ctx) {
  requireSameRing(ctx.baseRing(), m.ring(), "buildJetMatrix");
  const unsigned n = ctx.order();
  const std::size_t r = m.rows(), s = m.cols();

  // derivatives[i] = D_i(M), entrywise.
  std::vector<PolyMatrix> derivatives(n + 1, PolyMatrix(ctx.jetRing(), r, s));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      const auto lift = jetLift(m.at(a, b), ctx);
      for (unsigned i = 0; i <= n; ++i) derivatives[i].set(a, b, lift[i]);
    }

  PolyMatrix out(ctx.jetRing(), (n + 1) * r, (n + 1) * s);
  for (unsigned bi = 0; bi <= n; ++bi)
    for (unsigned bj = 0; bj <= bi; ++bj)
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < s; ++b)
          out.set(bi * r + a, bj * s + b, derivatives[bi - bj].at(a, b));
  return out;
}

namespace {

constexpr std::size_t kLaplaceLimit = 12;

Polynomial laplaceDeterminant(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  // memo[mask] = determinant of rows [n - popcount(mask), n) restricted to
  // the columns in mask.
  std::vector<std::optional<Polynomial>> memo(std::size_t{1} << n);
  memo[0] = Polynomial::constant(m.ring(), 1);
  for (std::size_t mask = 1; mask < memo.size(); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    const std::size_t row = n - size;
    Polynomial acc(m.ring());
    std::size_t position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (std::size_t{1} << c))) continue;
      const Polynomial& entry = m.at(row, c);
      const Polynomial& rest = *memo[mask & ~(std::size_t{1} << c)];
      if (!entry.isZero() && !rest.isZero()) {
        if (position % 2 == 0)
          acc += entry * rest;
        else
          acc -= entry * rest;
      }
      ++position;
    }
    memo[mask] = std::move(acc);
  }
  return *memo.back();
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (!m.isSquare())
    throw DomainError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + " matrix");
  if (m.rows() == 0) return Polynomial::constant(m.ring(), 1);
  if (m.rows() > kLaplaceLimit) return determinantBareiss(m);
  return laplaceDeterminant(m);
}

Polynomial determinantBareiss(const PolyMatrix& m) {
  if (!m.isSquare()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.ring(), 1);
  PolyMatrix a = m;
  Polynomial previous = Polynomial::constant(m.ring(), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).isZero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a.at(pivot, k).isZero()) ++pivot;
      if (pivot == n) return Polynomial(m.ring());
      for (std::size_t c = 0; c < n; ++c) {
        Polynomial tmp = a.at(k, c);
        a.set(k, c, a.at(pivot, c));
        a.set(pivot, c, std::move(tmp));
      }
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.set(i, j, divideExact(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), previous));
    previous = a.at(k, k);
  }
  Polynomial det = a.at(n - 1, n - 1);
  return negate ? -det : det;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Polynomial> rawMinors(const PolyMatrix& m, std::size_t k, const MinorOptions& options) {
  if (k == 0 || k > std::min(m.rows(), m.cols()))
    throw DomainError("minor size " + std::to_string(k) + " out of range for a " +
                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  if (k > options.maxMinorSize)
    throw ResourceLimitError("minor size " + std::to_string(k) + " exceeds the cap of " +
                             std::to_string(options.maxMinorSize));

  const auto colSets = combinations(m.cols(), k);
  const auto rowSets = combinations(m.rows(), k);
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  jobs.reserve(colSets.size() * rowSets.size());
  for (std::size_t c = 0; c < colSets.size(); ++c)
    for (std::size_t r = 0; r < rowSets.size(); ++r) jobs.emplace_back(c, r);

  std::vector<std::optional<Polynomial>> results(jobs.size());
  auto work = [&](std::size_t j) {
    results[j] = determinant(m.submatrix(rowSets[jobs[j].second], colSets[jobs[j].first]));
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || jobs.size() < 2) {
    for (std::size_t j = 0; j < jobs.size(); ++j) work(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, jobs.size()); ++t)
      pool.emplace_back([&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) work(j);
      });
    for (auto& t : pool) t.join();
  }

  std::vector<Polynomial> minors;
  for (auto& d : results) {
    if (d->isZero()) continue;
    if (std::find(minors.begin(), minors.end(), *d) == minors.end()) minors.push_back(std::move(*d));
  }
  return minors;
}

Ideal minorsIdeal(const PolyMatrix& m, std::size_t k, const MinorOptions& options) {
  Ideal ideal(m.ring(), rawMinors(m, k, options));
  return options.interreduce ? interreduce(ideal, options.groebner) : ideal;
}

bool genericRankAtLeast(const PolyMatrix& m, std::size_t r) {
  if (r == 0) return true;
  if (r > std::min(m.rows(), m.cols())) return false;
  for (const auto& cols : combinations(m.cols(), r))
    for (const auto& rows : combinations(m.rows(), r))
      if (!determinant(m.submatrix(rows, cols)).isZero()) return true;
  return false;
}

}  // namespace jetnash
