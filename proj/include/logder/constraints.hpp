#ifndef LOGDER_CONSTRAINTS_HPP
#define LOGDER_CONSTRAINTS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/logderiv.hpp"

namespace logder {

/// theta = sum_k m_k v_k with distinct monomials in descending graded-lex
/// order and nonzero coefficient vectors v_k.
struct MonomialDecomposition {
  std::vector<Monomial> monomials;
  std::vector<RationalVector> vectors;

  std::size_t size() const noexcept { return monomials.size(); }
};

MonomialDecomposition monomial_decomposition(const Derivation& theta);
Derivation reassemble(const MonomialDecomposition& decomposition, std::size_t ell);

/// Contact values c(k, j) = alpha_j(v_k), k over monomials, j over forms.
class ContactTable {
 public:
  ContactTable(std::size_t monomials, std::size_t forms)
      : monomials_(monomials), forms_(forms), values_(monomials * forms) {}

  std::size_t monomials() const noexcept { return monomials_; }
  std::size_t forms() const noexcept { return forms_; }
  const Rational& operator()(std::size_t k, std::size_t j) const { return values_[k * forms_ + j]; }
  Rational& operator()(std::size_t k, std::size_t j) { return values_[k * forms_ + j]; }

 private:
  std::size_t monomials_;
  std::size_t forms_;
  std::vector<Rational> values_;
};

ContactTable contact_table(const Arrangement& a, const MonomialDecomposition& decomposition);

/// Divisibility of theta(alpha_i): the coefficient of `reduced` in
/// sum_k (m_k mod alpha_i) c(k, i) vanishes.
struct InteriorSource {
  std::size_t hyperplane;
  Monomial reduced;
};

/// A circuit relation sum_j b_j alpha_j = 0 evaluated at v_k.
struct ExteriorSource {
  Circuit circuit;
  std::size_t monomial;
};

/// Relation induced by a complement zero of an associated field.
struct HiddenSource {
  RationalVector point;
  std::vector<std::size_t> basis;
};

/// Linear relation sum coefficient(k, j) * c(k, j) = 0 over contact symbols.
struct ConstraintRow {
  using Cell = std::pair<std::size_t, std::size_t>;  // (monomial k, form j)

  std::variant<InteriorSource, ExteriorSource, HiddenSource> source;
  std::map<Cell, Rational> coefficients;

  std::string kind() const;
  Rational evaluate(const ContactTable& table) const;
};

std::vector<ConstraintRow> interior_constraints(const Arrangement& a, const Derivation& theta, std::size_t i);

/// One row per circuit and monomial index k < monomial_count.
std::vector<ConstraintRow> exterior_constraints(const Arrangement& a, std::size_t monomial_count);

struct ConstraintSpace {
  std::size_t monomials = 0;
  std::size_t forms = 0;
  std::vector<ConstraintRow> rows;
  /// Row space in reduced echelon form; column k * forms + j is cell (k, j).
  EchelonForm echelon;

  std::size_t rank() const noexcept { return echelon.rank(); }
};

ConstraintSpace constraint_space(const Arrangement& a, const Derivation& theta);

/// q_t = theta(alpha_{basis[t]}) / alpha_{basis[t]} for independent forms.
struct AssociatedField {
  std::vector<std::size_t> basis_indices;
  std::vector<Polynomial> q;
};

AssociatedField associated_field(const Arrangement& a, const Derivation& theta,
                                 std::span<const std::size_t> basis_indices);

struct CriticalPointCheck {
  bool is_zero = false;
  bool in_complement = false;
};

CriticalPointCheck verify_critical_point(const Arrangement& a, const AssociatedField& field,
                                         std::span<const Rational> point);

struct CriticalPointSearch {
  std::vector<RationalVector> points;
  int height = 0;
  std::size_t points_scanned = 0;
  /// True when every q_t is homogeneous and points were scanned as rays.
  bool projective = false;
};

/// Scans rational points with numerators bounded by `height` in absolute
/// value and denominators in 1..height. For homogeneous fields only primitive
/// integer representatives (first nonzero coordinate positive) are visited.
/// Returns complement zeros in scan order. The scan is never complete.
CriticalPointSearch search_critical_points(const Arrangement& a, const AssociatedField& field, int height);

/// Row with coefficient m_k(c) on cell (k, t) for t in the basis. Throws
/// PreconditionFailed unless c is a complement zero of the associated field.
ConstraintRow hidden_constraint(const Arrangement& a, const Derivation& theta, std::span<const Rational> point,
                                std::span<const std::size_t> basis_indices);

struct TransportResult {
  std::size_t solution_dim = 0;
  std::vector<Derivation> solution_basis;
  /// Orthogonal projection of theta's coefficients onto the solution space.
  std::optional<Derivation> witness;
  std::size_t rows_checked = 0;
  std::size_t rows_satisfied = 0;

  bool witness_satisfies_constraints() const noexcept { return witness && rows_checked == rows_satisfied; }
};

/// Searches for theta' on `target` with theta's monomial support, relabels the
/// interior and exterior rows of theta through `perm` and evaluates them on
/// the witness. Reports data only.
TransportResult transport_derivation(const Arrangement& source, const Arrangement& target,
                                     std::span<const std::size_t> perm, const Derivation& theta);

}  // namespace logder

#endif  // LOGDER_CONSTRAINTS_HPP
