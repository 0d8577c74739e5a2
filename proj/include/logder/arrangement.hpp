#ifndef LOGDER_ARRANGEMENT_HPP
#define LOGDER_ARRANGEMENT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "logder/matrix.hpp"
#include "logder/polynomial.hpp"

namespace logder {

/// Central, simple, essential arrangement of n hyperplanes in dimension ell.
///
/// Construction validates the forms: each has ell coefficients and is
/// nonzero, no two are proportional (DuplicateHyperplane), and together they
/// span the dual space (NonEssential). Hyperplane indices are 0-based.
class Arrangement {
 public:
  Arrangement(std::size_t ell, std::vector<LinearForm> forms);

  std::size_t ell() const noexcept { return ell_; }
  std::size_t size() const noexcept { return forms_.size(); }
  const LinearForm& form(std::size_t i) const { return forms_.at(i); }
  std::span<const LinearForm> forms() const noexcept { return forms_; }

  /// n x ell matrix whose row i holds the coefficients of alpha_i.
  RationalMatrix coefficient_matrix() const;

  /// True when the first ell forms are exactly x1, ..., x_ell.
  bool is_canonical() const;

  /// Same hyperplanes in the same order, forms compared up to scalars.
  bool projectively_equal(const Arrangement& other) const;

 private:
  std::size_t ell_;
  std::vector<LinearForm> forms_;
};

/// Rank of the normal vectors of forms[indices...].
std::size_t subset_rank(std::span<const LinearForm> forms, std::span<const std::size_t> indices);

/// Rank of the full coefficient matrix; useful as a diagnostic on inputs
/// that fail the essential check.
std::size_t coefficient_rank(std::span<const LinearForm> forms);

/// Product of the forms, the defining polynomial Q.
Polynomial defining_polynomial(const Arrangement& a);

/// True iff no form vanishes at the point.
bool point_in_complement(const Arrangement& a, std::span<const Rational> point);

/// Coordinate change X = matrix * x taking the chosen independent forms to
/// the coordinate functions. `permutation[p]` is the original index of the
/// form placed at position p.
struct ChangeOfBasis {
  RationalMatrix matrix;
  RationalMatrix inverse;
  std::vector<std::size_t> permutation;

  bool is_identity() const;
};

struct CanonicalForm {
  Arrangement arrangement;
  ChangeOfBasis change;
};

/// Moves the lexicographically first independent ell-subset of forms to the
/// front and changes coordinates so those forms become x1..x_ell. Every other
/// form alpha_j becomes beta_j = alpha_j o matrix^{-1}, left unscaled.
CanonicalForm to_canonical(const Arrangement& a);

struct Flat {
  std::vector<std::size_t> hyperplanes;
  std::size_t rank;

  friend bool operator==(const Flat&, const Flat&) = default;
};

/// Every flat of rank 1..ell as a closed set of hyperplane indices, ordered by
/// rank and then lexicographically.
std::vector<Flat> intersection_lattice(const Arrangement& a);

/// Minimal dependent set with sum_j coefficients[j] * alpha_{indices[j]} = 0,
/// normalized so the first coefficient is 1.
struct Circuit {
  std::vector<std::size_t> indices;
  std::vector<Rational> coefficients;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// All circuits (every circuit has at most ell + 1 elements), ordered by size
/// then lexicographically.
std::vector<Circuit> circuits(const Arrangement& a);
std::vector<Circuit> circuits(std::span<const LinearForm> forms);

/// Checks that `perm` (perm[i] = image of hyperplane i) preserves the rank of
/// every index subset of size <= ell. Throws InputError on size mismatch or
/// if perm is not a bijection.
bool verify_lattice_bijection(std::span<const LinearForm> a, std::span<const LinearForm> b,
                              std::span<const std::size_t> perm);
bool verify_lattice_bijection(const Arrangement& a, const Arrangement& b, std::span<const std::size_t> perm);

/// Calls `visit` on every index subset of [0, n) of size 1..max_size, in
/// increasing size then lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t max_size, Visit&& visit) {
  std::vector<std::size_t> subset;
  for (std::size_t size = 1; size <= max_size && size <= n; ++size) {
    subset.resize(size);
    for (std::size_t i = 0; i < size; ++i) subset[i] = i;
    while (true) {
      visit(std::span<const std::size_t>(subset));
      std::size_t pos = size;
      while (pos > 0 && subset[pos - 1] == n - size + pos - 1) --pos;
      if (pos == 0) break;
      ++subset[pos - 1];
      for (std::size_t i = pos; i < size; ++i) subset[i] = subset[i - 1] + 1;
    }
  }
}

}  // namespace logder

#endif  // LOGDER_ARRANGEMENT_HPP
