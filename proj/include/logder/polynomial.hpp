#ifndef LOGDER_POLYNOMIAL_HPP
#define LOGDER_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logder/rational.hpp"

namespace logder {

class RationalMatrix;

/// Exponent vector of a monomial in x1..x_ell.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exponents_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exponents_; }

  std::uint64_t degree() const noexcept;
  bool divides(const Monomial& other) const;

  Rational evaluate(std::span<const Rational> point) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Graded lexicographic order with x1 > x2 > ... > x_ell.
/// Returns true when `a` is strictly greater than `b`.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of total degree `degree` in `nvars` variables, in
/// descending graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree);

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in descending graded-lex order and no stored coefficient
/// is ever zero, so equality is structural and rendering is canonical.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  static Polynomial linear(std::span<const Rational> coeffs);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;
  /// Leading term in graded-lex order. Requires a nonzero polynomial.
  const TermMap::value_type& leading_term() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// Homogeneous linear form a_1 x_1 + ... + a_ell x_ell.
class LinearForm {
 public:
  explicit LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t nvars() const noexcept { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  /// Index of the first nonzero coefficient (the default elimination pivot).
  std::optional<std::size_t> leading_index() const;
  Rational evaluate(std::span<const Rational> point) const;
  Polynomial to_polynomial() const { return Polynomial::linear(coeffs_); }
  bool is_proportional_to(const LinearForm& other) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<Rational> coeffs_;
};

Rational eval_poly(const Polynomial& p, std::span<const Rational> point);

struct LinearDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// Divides by a linear form, eliminating the pivot variable:
/// p = quotient * form + remainder, with remainder free of x_pivot.
/// Default pivot: first variable with a nonzero coefficient.
LinearDivision divide_by_linear(const Polynomial& p, const LinearForm& form,
                                std::optional<std::size_t> pivot = std::nullopt);

/// Remainder of divide_by_linear: p with x_pivot = -(1/a_pivot) sum_{t != pivot} a_t x_t.
Polynomial reduce_mod_linear(const Polynomial& p, const LinearForm& form,
                             std::optional<std::size_t> pivot = std::nullopt);

/// Quotient p / form when the division is exact.
std::optional<Polynomial> divide_exact(const Polynomial& p, const LinearForm& form);

/// Exact multivariate division. Returns nullopt unless divisor divides p.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& divisor);

/// Substitutes x_i = sum_j m(i, j) y_j.
Polynomial compose_linear(const Polynomial& p, const RationalMatrix& m);

/// Parses the polynomial text grammar: terms "c", "c*mono" or "mono" joined by
/// '+'/'-', mono a product of "xN" or "xN^E". Parenthesized sub-expressions
/// and products of them are also accepted. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars);

/// Canonical rendering in descending graded-lex order, e.g. "2*x1^2 - x2 + 1/3".
std::string to_string(const Polynomial& p);

}  // namespace logder

#endif  // LOGDER_POLYNOMIAL_HPP
