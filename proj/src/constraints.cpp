#include "logder/constraints.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "logder/error.hpp"

namespace logder {

MonomialDecomposition monomial_decomposition(const Derivation& theta) {
  std::map<Monomial, RationalVector, GrlexGreater> collected;
  for (std::size_t c = 0; c < theta.ell(); ++c) {
    for (const auto& [m, coeff] : theta[c].terms()) {
      auto [it, inserted] = collected.try_emplace(m, RationalVector(theta.ell()));
      it->second[c] = coeff;
    }
  }
  MonomialDecomposition out;
  for (auto& [m, v] : collected) {
    out.monomials.push_back(m);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

Derivation reassemble(const MonomialDecomposition& decomposition, std::size_t ell) {
  std::vector<Polynomial> coords(ell, Polynomial(ell));
  for (std::size_t k = 0; k < decomposition.size(); ++k) {
    for (std::size_t c = 0; c < ell; ++c) coords[c].add_term(decomposition.monomials[k], decomposition.vectors[k][c]);
  }
  return Derivation(std::move(coords));
}

ContactTable contact_table(const Arrangement& a, const MonomialDecomposition& decomposition) {
  ContactTable table(decomposition.size(), a.size());
  for (std::size_t k = 0; k < decomposition.size(); ++k) {
    if (decomposition.vectors[k].size() != a.ell()) throw InputError("decomposition dimension does not match arrangement");
    for (std::size_t j = 0; j < a.size(); ++j) table(k, j) = a.form(j).evaluate(decomposition.vectors[k]);
  }
  return table;
}

std::string ConstraintRow::kind() const {
  if (std::holds_alternative<InteriorSource>(source)) return "interior";
  if (std::holds_alternative<ExteriorSource>(source)) return "exterior";
  return "hidden";
}

Rational ConstraintRow::evaluate(const ContactTable& table) const {
  Rational sum = 0;
  for (const auto& [cell, b] : coefficients) {
    if (cell.first >= table.monomials() || cell.second >= table.forms()) {
      throw InputError("constraint row refers to a cell outside the contact table");
    }
    sum += b * table(cell.first, cell.second);
  }
  return sum;
}

namespace {

std::vector<ConstraintRow> interior_rows(const LinearForm& form, std::size_t i,
                                         const MonomialDecomposition& decomposition) {
  std::map<Monomial, ConstraintRow, GrlexGreater> by_reduced;
  for (std::size_t k = 0; k < decomposition.size(); ++k) {
    const Polynomial reduced = reduce_mod_linear(Polynomial::monomial(decomposition.monomials[k]), form);
    for (const auto& [mu, coeff] : reduced.terms()) {
      auto it = by_reduced.find(mu);
      if (it == by_reduced.end()) {
        it = by_reduced.emplace(mu, ConstraintRow{InteriorSource{i, mu}, {}}).first;
      }
      it->second.coefficients[{k, i}] += coeff;
    }
  }
  std::vector<ConstraintRow> rows;
  for (auto& [mu, row] : by_reduced) {
    std::erase_if(row.coefficients, [](const auto& entry) { return entry.second == 0; });
    if (!row.coefficients.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ConstraintRow> exterior_rows(std::span<const Circuit> cs, std::size_t monomial_count) {
  std::vector<ConstraintRow> rows;
  for (const auto& circuit : cs) {
    for (std::size_t k = 0; k < monomial_count; ++k) {
      ConstraintRow row{ExteriorSource{circuit, k}, {}};
      for (std::size_t t = 0; t < circuit.indices.size(); ++t) {
        row.coefficients[{k, circuit.indices[t]}] = circuit.coefficients[t];
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void check_basis(const Arrangement& a, std::span<const std::size_t> basis) {
  if (basis.size() != a.ell()) {
    throw InputError("associated field needs exactly " + std::to_string(a.ell()) + " hyperplane indices");
  }
  for (auto i : basis) {
    if (i >= a.size()) throw InputError("hyperplane index " + std::to_string(i + 1) + " out of range");
  }
  if (subset_rank(a.forms(), basis) != a.ell()) {
    throw InputError("chosen hyperplanes are linearly dependent");
  }
}

}  // namespace

std::vector<ConstraintRow> interior_constraints(const Arrangement& a, const Derivation& theta, std::size_t i) {
  if (i >= a.size()) throw InputError("hyperplane index out of range");
  k_vector(a, theta);
  return interior_rows(a.form(i), i, monomial_decomposition(theta));
}

std::vector<ConstraintRow> exterior_constraints(const Arrangement& a, std::size_t monomial_count) {
  const auto cs = circuits(a);
  return exterior_rows(cs, monomial_count);
}

ConstraintSpace constraint_space(const Arrangement& a, const Derivation& theta) {
  k_vector(a, theta);
  const auto decomposition = monomial_decomposition(theta);
  ConstraintSpace space;
  space.monomials = decomposition.size();
  space.forms = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto rows = interior_rows(a.form(i), i, decomposition);
    space.rows.insert(space.rows.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
  }
  auto ext = exterior_constraints(a, decomposition.size());
  space.rows.insert(space.rows.end(), std::make_move_iterator(ext.begin()), std::make_move_iterator(ext.end()));

  const std::size_t width = space.monomials * space.forms;
  RationalMatrix m(space.rows.size(), width);
  for (std::size_t r = 0; r < space.rows.size(); ++r) {
    for (const auto& [cell, b] : space.rows[r].coefficients) m(r, cell.first * space.forms + cell.second) = b;
  }
  space.echelon = reduced_echelon(m);
  return space;
}

AssociatedField associated_field(const Arrangement& a, const Derivation& theta,
                                 std::span<const std::size_t> basis_indices) {
  check_basis(a, basis_indices);
  const KTuple k = k_vector(a, theta);
  AssociatedField field{std::vector<std::size_t>(basis_indices.begin(), basis_indices.end()), {}};
  for (auto i : basis_indices) field.q.push_back(k.entries[i]);
  return field;
}

CriticalPointCheck verify_critical_point(const Arrangement& a, const AssociatedField& field,
                                         std::span<const Rational> point) {
  if (point.size() != a.ell()) throw InputError("point dimension does not match arrangement");
  CriticalPointCheck check;
  check.is_zero = std::all_of(field.q.begin(), field.q.end(), [&](const Polynomial& q) { return q.evaluate(point) == 0; });
  check.in_complement = point_in_complement(a, point);
  return check;
}

CriticalPointSearch search_critical_points(const Arrangement& a, const AssociatedField& field, int height) {
  if (height < 1) throw InputError("search height must be at least 1");
  const std::size_t ell = a.ell();
  CriticalPointSearch result;
  result.height = height;
  result.projective = std::all_of(field.q.begin(), field.q.end(), [](const Polynomial& q) { return q.is_homogeneous(); });

  auto consider = [&](const RationalVector& point) {
    ++result.points_scanned;
    const auto check = verify_critical_point(a, field, point);
    if (check.is_zero && check.in_complement) result.points.push_back(point);
  };

  std::vector<long> numerators(ell, -height);
  auto advance = [&]() {
    for (std::size_t t = ell; t-- > 0;) {
      if (numerators[t] < height) {
        ++numerators[t];
        return true;
      }
      numerators[t] = -height;
    }
    return false;
  };

  if (result.projective) {
    do {
      long g = 0;
      long first = 0;
      for (auto v : numerators) {
        g = std::gcd(g, v);
        if (first == 0) first = v;
      }
      if (g != 1 || first < 0) continue;
      RationalVector point(numerators.begin(), numerators.end());
      consider(point);
    } while (advance());
    return result;
  }

  std::set<RationalVector> seen;
  for (long den = 1; den <= height; ++den) {
    std::fill(numerators.begin(), numerators.end(), -height);
    do {
      RationalVector point(ell);
      for (std::size_t t = 0; t < ell; ++t) {
        point[t] = Rational(numerators[t], den);
        point[t].canonicalize();
      }
      if (seen.insert(point).second) consider(point);
    } while (advance());
  }
  return result;
}

ConstraintRow hidden_constraint(const Arrangement& a, const Derivation& theta, std::span<const Rational> point,
                                std::span<const std::size_t> basis_indices) {
  const AssociatedField field = associated_field(a, theta, basis_indices);
  const auto check = verify_critical_point(a, field, point);
  if (!check.is_zero || !check.in_complement) {
    throw PreconditionFailed("point is not a critical point of the associated field in the complement");
  }
  const auto decomposition = monomial_decomposition(theta);
  ConstraintRow row{HiddenSource{RationalVector(point.begin(), point.end()),
                                 std::vector<std::size_t>(basis_indices.begin(), basis_indices.end())},
                    {}};
  for (std::size_t k = 0; k < decomposition.size(); ++k) {
    const Rational value = decomposition.monomials[k].evaluate(point);
    if (value == 0) continue;
    for (auto t : basis_indices) row.coefficients[{k, t}] += value;
  }
  return row;
}

TransportResult transport_derivation(const Arrangement& source, const Arrangement& target,
                                     std::span<const std::size_t> perm, const Derivation& theta) {
  if (source.ell() != target.ell() || source.size() != target.size()) {
    throw InputError("arrangements must have equal dimension and hyperplane count");
  }
  if (!verify_lattice_bijection(source, target, perm)) {
    throw PreconditionFailed("hyperplane map does not preserve the intersection lattice");
  }
  k_vector(source, theta);
  const std::size_t ell = source.ell();
  const auto decomposition = monomial_decomposition(theta);
  const std::size_t big_m = decomposition.size();
  const std::size_t unknowns = big_m * ell;  // index k * ell + c

  TransportResult result;
  if (big_m == 0) return result;

  std::vector<RationalVector> rows;
  for (const auto& form : target.forms()) {
    std::map<Monomial, RationalVector, GrlexGreater> by_reduced;
    for (std::size_t k = 0; k < big_m; ++k) {
      const Polynomial reduced = reduce_mod_linear(Polynomial::monomial(decomposition.monomials[k]), form);
      for (const auto& [mu, coeff] : reduced.terms()) {
        auto [it, inserted] = by_reduced.try_emplace(mu, RationalVector(unknowns));
        for (std::size_t c = 0; c < ell; ++c) {
          if (form[c] != 0) it->second[k * ell + c] += form[c] * coeff;
        }
      }
    }
    for (auto& [mu, row] : by_reduced) rows.push_back(std::move(row));
  }
  if (rows.empty()) rows.emplace_back(unknowns);
  const auto kernel = kernel_basis(RationalMatrix::from_rows(rows, unknowns));
  result.solution_dim = kernel.size();

  auto to_decomposition = [&](const RationalVector& v) {
    MonomialDecomposition d{decomposition.monomials, {}};
    for (std::size_t k = 0; k < big_m; ++k) d.vectors.emplace_back(v.begin() + k * ell, v.begin() + (k + 1) * ell);
    return d;
  };
  for (const auto& v : kernel) result.solution_basis.push_back(reassemble(to_decomposition(v), ell));
  if (kernel.empty()) return result;

  // Projection of theta's own coefficients: solve (B^T B) y = B^T t.
  RationalVector target_vec(unknowns);
  for (std::size_t k = 0; k < big_m; ++k) {
    for (std::size_t c = 0; c < ell; ++c) target_vec[k * ell + c] = decomposition.vectors[k][c];
  }
  const std::size_t r = kernel.size();
  RationalMatrix gram(r, r);
  RationalVector rhs(r);
  for (std::size_t p = 0; p < r; ++p) {
    for (std::size_t q = 0; q < r; ++q) {
      for (std::size_t u = 0; u < unknowns; ++u) gram(p, q) += kernel[p][u] * kernel[q][u];
    }
    for (std::size_t u = 0; u < unknowns; ++u) rhs[p] += kernel[p][u] * target_vec[u];
  }
  const RationalVector y = *inverse(gram) * rhs;
  RationalVector witness(unknowns);
  for (std::size_t p = 0; p < r; ++p) {
    for (std::size_t u = 0; u < unknowns; ++u) witness[u] += y[p] * kernel[p][u];
  }
  if (std::all_of(witness.begin(), witness.end(), [](const Rational& x) { return x == 0; })) witness = kernel[0];
  const auto witness_decomposition = to_decomposition(witness);
  result.witness = reassemble(witness_decomposition, ell);

  // Relabel theta's interior and exterior rows through perm and evaluate
  // them on the witness's contact values over the target arrangement.
  const ContactTable table = contact_table(target, witness_decomposition);
  std::vector<ConstraintRow> source_rows;
  for (std::size_t i = 0; i < source.size(); ++i) {
    auto rows_i = interior_rows(source.form(i), i, decomposition);
    source_rows.insert(source_rows.end(), rows_i.begin(), rows_i.end());
  }
  auto ext = exterior_constraints(source, big_m);
  source_rows.insert(source_rows.end(), ext.begin(), ext.end());
  for (const auto& row : source_rows) {
    Rational value = 0;
    for (const auto& [cell, b] : row.coefficients) value += b * table(cell.first, perm[cell.second]);
    ++result.rows_checked;
    if (value == 0) ++result.rows_satisfied;
  }
  return result;
}

}  // namespace logder
