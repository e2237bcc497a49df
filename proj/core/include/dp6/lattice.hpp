#pragma once

// Exact integer matrix algebra over Z: Smith normal form, kernels,
// cokernels and exactness of composable Z-linear maps.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace dp6 {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers. A matrix with
/// zero rows or zero columns is valid and models a map to or from Z^0.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const;
  std::vector<Integer> column(std::size_t j) const;
  /// Columns [first, first + count).
  IntMatrix columns(std::size_t first, std::size_t count) const;
  /// Rows [first, first + count).
  IntMatrix row_block(std::size_t first, std::size_t count) const;

  IntMatrix transposed() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::vector<Integer> apply(const std::vector<Integer>& x) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// [a | b]
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
/// [a ; b]
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
/// Block diagonal diag(a, b).
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Finitely generated abelian group Z^free_rank + (+) Z/d_i with d_1 | d_2 | ...
struct FinAbGroup {
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;

  bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
  /// Order of the torsion part.
  Integer torsion_order() const;
  /// "0", "Z/2", "Z^2 + Z/2 + Z/4", ...
  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
};

struct SmithForm {
  IntMatrix left;      // U, unimodular rows x rows
  IntMatrix diagonal;  // D = U * M * V
  IntMatrix right;     // V, unimodular cols x cols

  /// Nonzero diagonal entries of D, in order.
  std::vector<Integer> invariant_factors() const;
  std::size_t rank() const { return invariant_factors().size(); }
};

/// U * M * V = D with D diagonal, d_i | d_{i+1}, d_i >= 0. Pivoting always
/// picks the smallest nonzero absolute value in the active block, ties going
/// to the lowest (row, col), so the output is deterministic.
SmithForm smith_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Bareiss fraction-free determinant. Throws std::invalid_argument for a
/// non-square matrix.
Integer determinant(const IntMatrix& m);

/// Column-style Hermite normal form of the lattice spanned by the columns of
/// `basis`, which must be linearly independent. Pivot rows increase left to
/// right, pivots are positive and entries of a pivot row to the left of the
/// pivot lie in [0, pivot).
IntMatrix column_hermite_form(const IntMatrix& basis);

/// Columns form a saturated Z-basis of {x : M x = 0}, in column Hermite form.
IntMatrix kernel_basis(const IntMatrix& m);

/// Z^rows / column-span(M).
FinAbGroup cokernel(const IntMatrix& m);

/// An integer C with A * C = X, or nullopt when no integer solution exists.
/// When A has full column rank the solution is unique.
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& x);

/// True iff the columns of `basis` span a saturated sublattice (all Smith
/// invariant factors equal to 1).
bool is_saturated(const IntMatrix& basis);

/// For a saturated sublattice S of Z^n (columns of `sub`, k of them):
/// `projection` is an (n - k) x n matrix with kernel exactly S and full image,
/// and `lift` an n x (n - k) right inverse of it.
struct QuotientMap {
  IntMatrix projection;
  IntMatrix lift;
};
QuotientMap saturated_quotient(const IntMatrix& sub);

/// Exactness of Z^k --A--> Z^n --B--> Z^r at the middle term: B * A = 0 and
/// image(A) = kernel(B). Throws std::invalid_argument when A.rows() != B.cols().
bool is_exact_pair(const IntMatrix& a, const IntMatrix& b);

}  // namespace dp6
