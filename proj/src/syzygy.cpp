#include "logder/syzygy.hpp"

#include <map>

#include "logder/error.hpp"

namespace logder {

const std::vector<Rational>& SyzygySystem::coefficients(std::size_t j) const {
  if (j < ell || j >= n) {
    throw InputError("equation index " + std::to_string(j + 1) + " outside " + std::to_string(ell + 1) + ".." +
                     std::to_string(n));
  }
  return rewrite_coeffs[j - ell];
}

SyzygySystem build_system(const Arrangement& canonical) {
  if (!canonical.is_canonical()) {
    throw InputError("syzygy system needs a canonical arrangement (first forms x1..x" +
                     std::to_string(canonical.ell()) + ")");
  }
  SyzygySystem sys;
  sys.ell = canonical.ell();
  sys.n = canonical.size();
  for (std::size_t j = sys.ell; j < sys.n; ++j) {
    const auto c = canonical.form(j).coefficients();
    sys.rewrite_coeffs.emplace_back(c.begin(), c.end());
  }
  return sys;
}

std::vector<SolutionTuple> GeneratorSet::all() const {
  std::vector<SolutionTuple> out{e};
  for (const auto& u : unit_members) out.push_back(u.tuple);
  for (const auto& k : koszul_members) out.push_back(k.tuple);
  return out;
}

GeneratorSet canonical_generators(const SyzygySystem& sys, std::size_t j) {
  const auto& a = sys.coefficients(j);
  const std::size_t ell = sys.ell;
  GeneratorSet g;
  g.j = j;
  g.e.entries.assign(ell, Polynomial::constant(ell, 1));
  for (std::size_t r = 0; r < ell; ++r) {
    if (a[r] != 0) continue;
    SolutionTuple unit{std::vector<Polynomial>(ell, Polynomial(ell)), std::nullopt};
    unit.entries[r] = Polynomial::constant(ell, 1);
    g.unit_members.push_back({r, std::move(unit)});
  }
  for (std::size_t s = 0; s < ell; ++s) {
    for (std::size_t t = s + 1; t < ell; ++t) {
      if (a[s] == 0 || a[t] == 0) continue;
      SolutionTuple k{std::vector<Polynomial>(ell, Polynomial(ell)), std::nullopt};
      k.entries[s] = a[t] * Polynomial::variable(ell, t);
      k.entries[t] = -a[s] * Polynomial::variable(ell, s);
      g.koszul_members.push_back({s, t, std::move(k)});
    }
  }
  return g;
}

Verification verify_solution(const SyzygySystem& sys, const SolutionTuple& sol, std::size_t j) {
  const auto& a = sys.coefficients(j);
  if (sol.entries.size() != sys.ell) throw InputError("solution tuple must have " + std::to_string(sys.ell) + " entries");
  Polynomial rhs(sys.ell);
  for (std::size_t i = 0; i < sys.ell; ++i) {
    if (a[i] != 0) rhs += sol.entries[i] * Polynomial::monomial(Monomial::variable(sys.ell, i), a[i]);
  }
  auto q = divide_exact(rhs, sys.form(j));
  if (!q) return {false, std::nullopt};
  return {true, std::move(*q)};
}

SolutionTuple complete_solution(const SyzygySystem& sys, const SolutionTuple& sol) {
  SolutionTuple out{sol.entries, sol.entries};
  for (std::size_t j = sys.ell; j < sys.n; ++j) {
    auto v = verify_solution(sys, sol, j);
    if (!v.ok) throw PreconditionFailed("tuple does not solve equation " + std::to_string(j + 1));
    out.completed->push_back(std::move(*v.k_j));
  }
  return out;
}

Derivation derivation_from_k(const SyzygySystem& sys, const SolutionTuple& sol) {
  complete_solution(sys, sol);
  std::vector<Polynomial> coords;
  for (std::size_t i = 0; i < sys.ell; ++i) coords.push_back(sol.entries[i] * Polynomial::variable(sys.ell, i));
  return Derivation(std::move(coords));
}

HyperplaneSplit split_wrt_hyperplane(const Arrangement& a, const Derivation& theta, std::size_t i) {
  if (i >= a.size()) throw InputError("hyperplane index out of range");
  const KTuple k = k_vector(a, theta);
  const Polynomial& scale = k.entries[i];
  return {theta - scale * euler_derivation(a.ell()), scale};
}

namespace {

RationalVector tuple_vector(const std::vector<Polynomial>& entries, const std::vector<Monomial>& monos) {
  RationalVector v(entries.size() * monos.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t k = 0; k < monos.size(); ++k) v[i * monos.size() + k] = entries[i].coefficient(monos[k]);
  }
  return v;
}

}  // namespace

std::vector<RationalVector> equation_solutions(const SyzygySystem& sys, std::size_t j, int degree) {
  if (degree < 0) throw InputError("degree must be non-negative");
  const auto& a = sys.coefficients(j);
  const LinearForm form = sys.form(j);
  const std::size_t ell = sys.ell;
  const auto monos = monomials_of_degree(ell, static_cast<std::uint32_t>(degree));
  const std::size_t unknowns = ell * monos.size();
  std::map<Monomial, RationalVector, GrlexGreater> rows;
  for (std::size_t i = 0; i < ell; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; k < monos.size(); ++k) {
      Monomial shifted = monos[k];
      shifted[i] += 1;
      const Polynomial reduced = reduce_mod_linear(Polynomial::monomial(shifted, a[i]), form);
      for (const auto& [mu, c] : reduced.terms()) {
        auto [it, inserted] = rows.try_emplace(mu, RationalVector(unknowns));
        it->second[i * monos.size() + k] += c;
      }
    }
  }
  std::vector<RationalVector> matrix_rows;
  for (auto& [mu, row] : rows) matrix_rows.push_back(std::move(row));
  if (matrix_rows.empty()) matrix_rows.emplace_back(unknowns);
  return kernel_basis(RationalMatrix::from_rows(matrix_rows, unknowns));
}

bool generators_span_solutions(const SyzygySystem& sys, std::size_t j, int degree) {
  const std::size_t ell = sys.ell;
  const auto monos = monomials_of_degree(ell, static_cast<std::uint32_t>(degree));
  const std::size_t width = ell * monos.size();
  std::vector<RationalVector> span;
  for (const auto& g : canonical_generators(sys, j).all()) {
    int gdeg = -1;
    for (const auto& p : g.entries) gdeg = std::max(gdeg, p.degree());
    if (gdeg > degree) continue;
    for (const auto& m : monomials_of_degree(ell, static_cast<std::uint32_t>(degree - gdeg))) {
      std::vector<Polynomial> shifted;
      for (const auto& p : g.entries) shifted.push_back(Polynomial::monomial(m) * p);
      span.push_back(tuple_vector(shifted, monos));
    }
  }
  const auto solutions = equation_solutions(sys, j, degree);
  if (solutions.empty()) return true;
  const std::size_t base = span.empty() ? 0 : rank(RationalMatrix::from_rows(span, width));
  span.insert(span.end(), solutions.begin(), solutions.end());
  return rank(RationalMatrix::from_rows(span, width)) == base;
}

}  // namespace logder
