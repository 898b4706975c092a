#include "lpa/exactmat.hpp"

#include <stdexcept>
#include <utility>

namespace lpa {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) throw std::invalid_argument("from_rows: no rows");
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return std::vector<Int>(entries_.begin() + i * cols_,
                          entries_.begin() + (i + 1) * cols_);
}

IntMatrix IntMatrix::with_column(const std::vector<Int>& col) const {
  if (col.size() != rows_)
    throw std::invalid_argument("with_column: length mismatch");
  IntMatrix m(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    m.at(i, cols_) = col[i];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sum: dimension mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

IntMatrix mat_pow(const IntMatrix& a, unsigned k) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("mat_pow: matrix not square");
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

std::size_t rank_q(const IntMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Int>> a(nr);
  for (std::size_t i = 0; i < nr; ++i) a[i] = m.row(i);

  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t pivot = rank;
    while (pivot < nr && a[pivot][col] == 0) ++pivot;
    if (pivot == nr) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < nr; ++i) {
      for (std::size_t j = col + 1; j < nc; ++j) {
        // One-step Bareiss update; the division by the previous pivot is
        // exact because every entry is a minor of the input matrix.
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::optional<RationalVector> solve_in_rowspan(const IntMatrix& m,
                                               const RationalVector& target) {
  const std::size_t nr = m.rows(), nc = m.cols();
  if (target.size() != nc)
    throw std::invalid_argument("solve_in_rowspan: target length mismatch");

  // Row-reduce a rational copy while tracking the transform T with T*m = R,
  // so every echelon row stays expressed in terms of the input rows.
  std::vector<RationalVector> r(nr, RationalVector(nc));
  std::vector<RationalVector> t(nr, RationalVector(nr));
  for (std::size_t i = 0; i < nr; ++i) {
    t[i][i] = 1;
    for (std::size_t j = 0; j < nc; ++j) r[i][j] = Rat(m.at(i, j));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < nc && next < nr; ++col) {
    std::size_t pivot = next;
    while (pivot < nr && r[pivot][col] == 0) ++pivot;
    if (pivot == nr) continue;
    std::swap(r[next], r[pivot]);
    std::swap(t[next], t[pivot]);
    for (std::size_t i = next + 1; i < nr; ++i) {
      if (r[i][col] == 0) continue;
      Rat f = r[i][col] / r[next][col];
      for (std::size_t j = col; j < nc; ++j) r[i][j] -= f * r[next][j];
      for (std::size_t j = 0; j < nr; ++j) t[i][j] -= f * t[next][j];
    }
    pivots.emplace_back(next, col);
    ++next;
  }

  RationalVector residual = target;
  RationalVector lambda(nr);
  for (const auto& [row, col] : pivots) {
    if (residual[col] == 0) continue;
    Rat mu = residual[col] / r[row][col];
    for (std::size_t j = 0; j < nc; ++j) residual[j] -= mu * r[row][j];
    for (std::size_t j = 0; j < nr; ++j) lambda[j] += mu * t[row][j];
  }
  for (const Rat& x : residual)
    if (x != 0) return std::nullopt;
  return lambda;
}

}  // namespace lpa
