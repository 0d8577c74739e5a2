#include "logder/logderiv.hpp"

#include <map>

#include "logder/error.hpp"

namespace logder {

Derivation::Derivation(std::vector<Polynomial> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("a derivation needs at least one coordinate");
  for (const auto& p : coords_) {
    if (p.nvars() != coords_.size()) {
      throw InputError("derivation coordinates must be polynomials in " + std::to_string(coords_.size()) +
                       " variables");
    }
  }
}

Derivation Derivation::zero(std::size_t ell) { return Derivation(std::vector<Polynomial>(ell, Polynomial(ell))); }

bool Derivation::is_zero() const {
  for (const auto& p : coords_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

std::optional<int> Derivation::degree() const {
  std::optional<int> d;
  for (const auto& p : coords_) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return std::nullopt;
    if (d && *d != p.degree()) return std::nullopt;
    d = p.degree();
  }
  return d;
}

Derivation& Derivation::operator+=(const Derivation& other) {
  if (other.ell() != ell()) throw InputError("derivations differ in dimension");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& other) {
  if (other.ell() != ell()) throw InputError("derivations differ in dimension");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Derivation operator*(const Polynomial& f, const Derivation& d) {
  std::vector<Polynomial> coords;
  coords.reserve(d.ell());
  for (const auto& p : d.coords_) coords.push_back(f * p);
  return Derivation(std::move(coords));
}

Derivation operator*(const Rational& c, const Derivation& d) {
  std::vector<Polynomial> coords;
  coords.reserve(d.ell());
  for (const auto& p : d.coords_) coords.push_back(c * p);
  return Derivation(std::move(coords));
}

Polynomial apply(const Derivation& theta, const Polynomial& p) {
  if (p.nvars() != theta.ell()) throw InputError("derivation and polynomial differ in variable count");
  Polynomial out(p.nvars());
  for (std::size_t i = 0; i < theta.ell(); ++i) {
    if (theta[i].is_zero()) continue;
    out += theta[i] * p.derivative(i);
  }
  return out;
}

Derivation euler_derivation(std::size_t ell) {
  if (ell == 0) throw InputError("Euler derivation needs ell >= 1");
  std::vector<Polynomial> coords;
  for (std::size_t i = 0; i < ell; ++i) coords.push_back(Polynomial::variable(ell, i));
  return Derivation(std::move(coords));
}

Polynomial KTuple::sum() const {
  if (entries.empty()) throw InputError("empty k-tuple");
  Polynomial s(entries[0].nvars());
  for (const auto& k : entries) s += k;
  return s;
}

namespace {

/// theta(alpha) for a linear form is sum_c a_c * p_c.
Polynomial apply_linear(const Derivation& theta, const LinearForm& form) {
  Polynomial out(theta.ell());
  for (std::size_t c = 0; c < theta.ell(); ++c) {
    if (form[c] != 0) out += form[c] * theta[c];
  }
  return out;
}

}  // namespace

KTuple k_vector(const Arrangement& a, const Derivation& theta) {
  if (theta.ell() != a.ell()) throw InputError("derivation dimension does not match arrangement");
  KTuple k;
  k.entries.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto q = divide_exact(apply_linear(theta, a.form(i)), a.form(i));
    if (!q) throw NotLogarithmic(i);
    k.entries.push_back(std::move(*q));
  }
  return k;
}

bool is_logarithmic(const Arrangement& a, const Derivation& theta) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!reduce_mod_linear(apply_linear(theta, a.form(i)), a.form(i)).is_zero()) return false;
  }
  return true;
}

GradedBasis graded_component(const Arrangement& a, int degree) {
  if (degree < 0) throw InputError("degree must be non-negative");
  const std::size_t ell = a.ell();
  const auto monos = monomials_of_degree(ell, static_cast<std::uint32_t>(degree));
  const std::size_t per_coord = monos.size();
  const std::size_t unknowns = ell * per_coord;

  std::vector<RationalVector> rows;
  for (const auto& form : a.forms()) {
    // theta(alpha) = sum_{c,k} a_c u_{c,k} m_k, reduced termwise modulo alpha.
    std::map<Monomial, std::size_t, GrlexGreater> row_of;
    std::vector<RationalVector> local;
    for (std::size_t k = 0; k < per_coord; ++k) {
      const Polynomial reduced = reduce_mod_linear(Polynomial::monomial(monos[k]), form);
      for (const auto& [mu, coeff] : reduced.terms()) {
        auto [it, inserted] = row_of.try_emplace(mu, local.size());
        if (inserted) local.emplace_back(unknowns);
        for (std::size_t c = 0; c < ell; ++c) {
          if (form[c] != 0) local[it->second][c * per_coord + k] += form[c] * coeff;
        }
      }
    }
    // Emit rows in graded-lex order of the reduced monomial.
    for (const auto& [mu, idx] : row_of) rows.push_back(std::move(local[idx]));
  }

  GradedBasis out;
  out.degree = degree;
  std::vector<RationalVector> kernel;
  if (rows.empty()) {
    for (std::size_t u = 0; u < unknowns; ++u) {
      RationalVector v(unknowns);
      v[u] = 1;
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = kernel_basis(RationalMatrix::from_rows(rows, unknowns));
  }
  for (const auto& v : kernel) out.members.push_back(from_graded_vector(v, ell, degree));
  return out;
}

std::size_t euler_multiple_dimension(std::size_t ell, int degree) {
  if (degree < 1) return 0;
  return monomials_of_degree(ell, static_cast<std::uint32_t>(degree - 1)).size();
}

RationalVector to_graded_vector(const Derivation& theta, int degree) {
  const auto monos = monomials_of_degree(theta.ell(), static_cast<std::uint32_t>(degree));
  RationalVector v(theta.ell() * monos.size());
  for (std::size_t c = 0; c < theta.ell(); ++c) {
    std::size_t matched = 0;
    for (std::size_t k = 0; k < monos.size(); ++k) {
      v[c * monos.size() + k] = theta[c].coefficient(monos[k]);
      if (v[c * monos.size() + k] != 0) ++matched;
    }
    if (matched != theta[c].size()) {
      throw InputError("derivation is not homogeneous of degree " + std::to_string(degree));
    }
  }
  return v;
}

Derivation from_graded_vector(std::span<const Rational> v, std::size_t ell, int degree) {
  const auto monos = monomials_of_degree(ell, static_cast<std::uint32_t>(degree));
  if (v.size() != ell * monos.size()) throw InputError("graded vector has the wrong length");
  std::vector<Polynomial> coords(ell, Polynomial(ell));
  for (std::size_t c = 0; c < ell; ++c) {
    for (std::size_t k = 0; k < monos.size(); ++k) coords[c].add_term(monos[k], v[c * monos.size() + k]);
  }
  return Derivation(std::move(coords));
}

SaitoResult saito_check(const Arrangement& a, std::span<const Derivation> thetas) {
  if (thetas.size() != a.ell()) {
    throw InputError("Saito's criterion needs exactly " + std::to_string(a.ell()) + " derivations");
  }
  for (const auto& t : thetas) k_vector(a, t);
  PolynomialMatrix m(a.ell(), std::vector<Polynomial>(a.ell(), Polynomial(a.ell())));
  for (std::size_t i = 0; i < a.ell(); ++i) {
    for (std::size_t j = 0; j < a.ell(); ++j) m[i][j] = thetas[j][i];
  }
  SaitoResult result{det_poly_matrix(m), 0, false};
  if (result.determinant.is_zero()) return result;
  const Polynomial q = defining_polynomial(a);
  const Rational c = result.determinant.leading_term().second / q.leading_term().second;
  if (result.determinant == c * q) {
    result.scalar = c;
    result.is_basis = true;
  }
  return result;
}

std::vector<Derivation> basis_shift(std::span<const Derivation> thetas, std::size_t index, const Polynomial& p) {
  if (thetas.empty()) throw InputError("empty derivation family");
  const std::size_t ell = thetas[0].ell();
  if (index == 0) throw InputError("the Euler derivation (position 1) cannot be shifted");
  if (index >= thetas.size()) throw InputError("shift index out of range");
  const Derivation euler = euler_derivation(ell);
  if (!(thetas[0] == euler)) throw PreconditionFailed("first member of the family must be the Euler derivation");
  std::vector<Derivation> out(thetas.begin(), thetas.end());
  out[index] += p * euler;
  return out;
}

std::string to_string(FreenessVerdict v) {
  switch (v) {
    case FreenessVerdict::free:
      return "free";
    case FreenessVerdict::not_free:
      return "not free";
    case FreenessVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

FreenessReport free_check(const Arrangement& a, int max_degree) {
  const std::size_t ell = a.ell();
  const std::size_t n = a.size();
  FreenessReport report;
  report.max_degree = max_degree;
  std::size_t exponent_sum = 0;

  for (int d = 0; d <= max_degree; ++d) {
    // Every remaining exponent is >= d and all exponents sum to n.
    if (exponent_sum + (ell - report.generators.size()) * static_cast<std::size_t>(d) > n) {
      report.verdict = FreenessVerdict::not_free;
      report.reason = "fewer than " + std::to_string(ell) + " generators up to degree " + std::to_string(d - 1) +
                      " and the remaining exponents would exceed n = " + std::to_string(n);
      return report;
    }
    report.searched_degree = d;
    const GradedBasis component = graded_component(a, d);
    if (component.members.empty()) continue;

    // Degree-d piece of the submodule generated so far.
    std::vector<RationalVector> span;
    for (std::size_t g = 0; g < report.generators.size(); ++g) {
      const int e = report.exponents[g];
      for (const auto& m : monomials_of_degree(ell, static_cast<std::uint32_t>(d - e))) {
        span.push_back(to_graded_vector(Polynomial::monomial(m) * report.generators[g], d));
      }
    }
    const std::size_t width = to_graded_vector(component.members[0], d).size();
    std::size_t current = span.empty() ? 0 : rank(RationalMatrix::from_rows(span, width));
    for (const auto& candidate : component.members) {
      span.push_back(to_graded_vector(candidate, d));
      const std::size_t r = rank(RationalMatrix::from_rows(span, width));
      if (r > current) {
        current = r;
        report.generators.push_back(candidate);
        report.exponents.push_back(d);
        exponent_sum += static_cast<std::size_t>(d);
      } else {
        span.pop_back();
      }
    }

    if (report.generators.size() > ell) {
      report.verdict = FreenessVerdict::not_free;
      report.reason = "more than " + std::to_string(ell) + " minimal generators up to degree " + std::to_string(d);
      return report;
    }
    if (report.generators.size() == ell) {
      report.saito = saito_check(a, report.generators);
      report.verdict = report.saito->is_basis ? FreenessVerdict::free : FreenessVerdict::not_free;
      report.reason = report.saito->is_basis ? "Saito's criterion holds"
                                             : "the first " + std::to_string(ell) +
                                                   " minimal generators fail Saito's criterion";
      return report;
    }
  }
  report.reason = "degree cap " + std::to_string(max_degree) + " reached with " +
                  std::to_string(report.generators.size()) + " of " + std::to_string(ell) + " generators";
  return report;
}

}  // namespace logder
