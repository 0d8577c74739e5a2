#ifndef LOGDER_LOGDERIV_HPP
#define LOGDER_LOGDERIV_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/matrix.hpp"
#include "logder/polynomial.hpp"

namespace logder {

/// Polynomial vector field theta = sum_i p_i D_i, stored by coordinates.
class Derivation {
 public:
  explicit Derivation(std::vector<Polynomial> coords);
  static Derivation zero(std::size_t ell);

  std::size_t ell() const noexcept { return coords_.size(); }
  const Polynomial& operator[](std::size_t i) const { return coords_.at(i); }
  std::span<const Polynomial> coords() const noexcept { return coords_; }

  bool is_zero() const;
  /// Common degree when every nonzero coordinate is homogeneous of the same
  /// degree; nullopt otherwise (and for the zero derivation).
  std::optional<int> degree() const;

  Derivation& operator+=(const Derivation& other);
  Derivation& operator-=(const Derivation& other);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(const Polynomial& f, const Derivation& d);
  friend Derivation operator*(const Rational& c, const Derivation& d);
  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  std::vector<Polynomial> coords_;
};

/// theta(p) = sum_i p_i * dp/dx_i.
Polynomial apply(const Derivation& theta, const Polynomial& p);

Derivation euler_derivation(std::size_t ell);

/// Quotients k_i = theta(alpha_i) / alpha_i.
struct KTuple {
  std::vector<Polynomial> entries;

  /// sum_i k_i, which equals theta(Q) / Q.
  Polynomial sum() const;
};

/// Throws NotLogarithmic with the first failing hyperplane.
KTuple k_vector(const Arrangement& a, const Derivation& theta);

bool is_logarithmic(const Arrangement& a, const Derivation& theta);

struct GradedBasis {
  int degree = 0;
  std::vector<Derivation> members;

  std::size_t dimension() const noexcept { return members.size(); }
};

/// Basis of the degree-d homogeneous logarithmic derivations: unknown
/// coefficients ordered by (coordinate, descending graded-lex monomial),
/// one linear condition per monomial of theta(alpha_i) mod alpha_i.
GradedBasis graded_component(const Arrangement& a, int degree);

/// dim of S_{d-1} * theta_E, i.e. binom(d - 1 + ell - 1, ell - 1) for d >= 1.
std::size_t euler_multiple_dimension(std::size_t ell, int degree);

/// Coefficient vector of a derivation homogeneous of degree d, in the
/// graded_component unknown order.
RationalVector to_graded_vector(const Derivation& theta, int degree);
Derivation from_graded_vector(std::span<const Rational> v, std::size_t ell, int degree);

struct SaitoResult {
  Polynomial determinant;
  Rational scalar;  // c with det = c * Q, or 0
  bool is_basis = false;
};

/// Saito's criterion on ell logarithmic derivations: the coefficient matrix
/// has theta_j as column j.
SaitoResult saito_check(const Arrangement& a, std::span<const Derivation> thetas);

/// Replaces thetas[index] by thetas[index] + p * theta_E. thetas[0] must be
/// the Euler derivation and index 0 is rejected.
std::vector<Derivation> basis_shift(std::span<const Derivation> thetas, std::size_t index, const Polynomial& p);

enum class FreenessVerdict { free, not_free, inconclusive };

std::string to_string(FreenessVerdict v);

struct FreenessReport {
  FreenessVerdict verdict = FreenessVerdict::inconclusive;
  std::vector<Derivation> generators;
  std::vector<int> exponents;
  int max_degree = 0;
  /// Highest degree actually examined.
  int searched_degree = -1;
  std::optional<SaitoResult> saito;
  std::string reason;
};

/// Greedy search for homogeneous minimal generators: ascend degrees, keep the
/// graded basis vectors not in S * (generators found so far), stop at ell
/// generators (decided by Saito's criterion) or at max_degree.
FreenessReport free_check(const Arrangement& a, int max_degree);

}  // namespace logder

#endif  // LOGDER_LOGDERIV_HPP
