#include "logder/matrix.hpp"

#include <algorithm>
#include <utility>

#include "logder/error.hpp"

namespace logder {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

RationalVector operator*(const RationalMatrix& m, const RationalVector& v) {
  if (v.size() != m.cols()) throw InputError("matrix-vector dimension mismatch");
  RationalVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

namespace {

using IntegerRow = std::vector<Integer>;

IntegerRow clear_denominators(const RationalMatrix& m, std::size_t r) {
  Integer scale = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Integer& den = m(r, c).get_den();
    if (den != 1) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
  }
  IntegerRow row(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Rational& q = m(r, c);
    if (q != 0) row[c] = q.get_num() * (scale / q.get_den());
  }
  return row;
}

bool is_zero_row(const IntegerRow& row) {
  return std::all_of(row.begin(), row.end(), [](const Integer& v) { return v == 0; });
}

void make_primitive(IntegerRow& row) {
  Integer g = 0;
  for (const auto& v : row) {
    if (v != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g > 1) {
    for (auto& v : row) {
      if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }
}

}  // namespace

EchelonForm reduced_echelon(const RationalMatrix& m) {
  std::vector<IntegerRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntegerRow row = clear_denominators(m, r);
    if (!is_zero_row(row)) {
      make_primitive(row);
      rows.push_back(std::move(row));
    }
  }

  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
    // Smallest nonzero magnitude pivot, first occurrence on ties.
    std::size_t best = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      if (best == rows.size() || mpz_cmpabs(rows[r][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0) best = r;
    }
    if (best == rows.size()) continue;
    std::swap(rows[next], rows[best]);
    const IntegerRow& pivot_row = rows[next];
    const Integer pivot = pivot_row[col];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col] == 0) continue;
      IntegerRow& target = rows[r];
      const Integer factor = target[col];
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (pivot_row[c] == 0) {
          if (target[c] != 0) target[c] *= pivot;
        } else {
          target[c] = target[c] * pivot - factor * pivot_row[c];
        }
      }
      make_primitive(target);
    }
    pivots.push_back(col);
    ++next;
  }

  EchelonForm out{RationalMatrix(pivots.size(), m.cols()), pivots};
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Integer& pivot = rows[r][pivots[r]];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (rows[r][c] != 0) {
        out.reduced(r, c) = Rational(rows[r][c], pivot);
        out.reduced(r, c).canonicalize();
      }
    }
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return reduced_echelon(m).rank(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const EchelonForm ef = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ef.pivot_columns) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    RationalVector v(m.cols());
    v[free_col] = 1;
    for (std::size_t r = 0; r < ef.pivot_columns.size(); ++r) v[ef.pivot_columns[r]] = -ef.reduced(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const Rational f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return det;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = 1;
  }
  const EchelonForm ef = reduced_echelon(augmented);
  if (ef.rank() < n || ef.pivot_columns[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
  }
  return inv;
}

Polynomial det_poly_matrix(const PolynomialMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw InputError("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw InputError("determinant of a non-square polynomial matrix");
  }
  const std::size_t nvars = m[0][0].nvars();
  PolynomialMatrix a = m;
  bool negate = false;
  Polynomial previous = Polynomial::constant(nvars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) return Polynomial(nvars);
    if (p != k) {
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial cross = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = divide_exact(cross, previous);
        if (!q) throw InputError("internal error: Bareiss step not exactly divisible");
        a[i][j] = std::move(*q);
      }
      a[i][k] = Polynomial(nvars);
    }
    previous = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace logder
