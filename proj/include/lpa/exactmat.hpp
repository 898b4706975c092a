#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace lpa {

// All arithmetic in this project is exact. Matrix powers grow like c^k, so
// entries are arbitrary-precision integers; span coefficients are rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rat>;

// Dense matrix over arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::vector<Int> row(std::size_t i) const;

  // Appends a column on the right (rank-augmentation helper).
  IntMatrix with_column(const std::vector<Int>& col) const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> entries_;
};

// Exact k-th power of a square matrix; k = 0 gives the identity.
IntMatrix mat_pow(const IntMatrix& a, unsigned k);

// Rank over the rationals via fraction-free Bareiss elimination. Exact for
// all integer inputs; intermediate entries stay minors of the input.
std::size_t rank_q(const IntMatrix& m);

// If target lies in the rational row span of m, returns coefficients lambda
// (length m.rows()) with lambda^T * m == target, produced by Gaussian
// elimination with a fixed pivot rule (leftmost nonzero column, topmost
// remaining row) so the result is deterministic. Otherwise nullopt.
std::optional<RationalVector> solve_in_rowspan(const IntMatrix& m,
                                               const RationalVector& target);

}  // namespace lpa
