#ifndef LOGDER_MATRIX_HPP
#define LOGDER_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "logder/polynomial.hpp"
#include "logder/rational.hpp"

namespace logder {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalMatrix transpose() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalVector operator*(const RationalMatrix& m, const RationalVector& v);

struct EchelonForm {
  /// Reduced row echelon form, zero rows dropped; pivot entries are 1.
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination done fraction-free: rows are cleared to integer
/// vectors, eliminated with integer cross-multiplication, and kept primitive.
/// Only the final normalization divides.
EchelonForm reduced_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Right nullspace basis: one vector per free column (in increasing column
/// order) with a 1 at that column and minus the RREF column at the pivots.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant by Bareiss fraction-free elimination with exact polynomial
/// division. Throws InputError if the matrix is not square.
Polynomial det_poly_matrix(const PolynomialMatrix& m);

}  // namespace logder

#endif  // LOGDER_MATRIX_HPP
