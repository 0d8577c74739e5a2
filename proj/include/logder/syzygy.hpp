#ifndef LOGDER_SYZYGY_HPP
#define LOGDER_SYZYGY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/logderiv.hpp"

namespace logder {

/// Equations k_j alpha_j = sum_i k_i a_ij x_i for j = ell+1..n of a canonical
/// arrangement. Convention: a_ij is the coefficient of x_i in alpha_j.
struct SyzygySystem {
  std::size_t ell = 0;
  std::size_t n = 0;
  /// rewrite_coeffs[j - ell] = (a_1j, ..., a_ell j) for 0-based j >= ell.
  std::vector<std::vector<Rational>> rewrite_coeffs;

  std::size_t equation_count() const noexcept { return rewrite_coeffs.size(); }
  const std::vector<Rational>& coefficients(std::size_t j) const;
  LinearForm form(std::size_t j) const { return LinearForm(coefficients(j)); }
};

/// Throws InputError unless the arrangement is canonical.
SyzygySystem build_system(const Arrangement& canonical);

/// An ell-tuple (k_1..k_ell), optionally completed to all n quotients.
struct SolutionTuple {
  std::vector<Polynomial> entries;
  std::optional<std::vector<Polynomial>> completed;
};

struct KoszulMember {
  std::size_t s;  // 0-based, s < t
  std::size_t t;
  SolutionTuple tuple;  // a_jt x_t e_s - a_js x_s e_t
};

struct UnitMember {
  std::size_t r;
  SolutionTuple tuple;  // e_r
};

/// Canonical generators of the solutions of the j-th equation.
struct GeneratorSet {
  std::size_t j = 0;  // 0-based form index, ell <= j < n
  SolutionTuple e;
  std::vector<UnitMember> unit_members;
  std::vector<KoszulMember> koszul_members;

  /// e first, then unit members, then Koszul members.
  std::vector<SolutionTuple> all() const;
};

GeneratorSet canonical_generators(const SyzygySystem& sys, std::size_t j);

struct Verification {
  bool ok = false;
  std::optional<Polynomial> k_j;
};

/// Checks that alpha_j divides sum_i k_i a_ij x_i; on success returns k_j.
Verification verify_solution(const SyzygySystem& sys, const SolutionTuple& sol, std::size_t j);

/// Verifies sol against every equation and fills in the n-tuple.
/// Throws PreconditionFailed naming the first failing equation.
SolutionTuple complete_solution(const SyzygySystem& sys, const SolutionTuple& sol);

/// theta = (k_1 x_1, ..., k_ell x_ell). Rejects unverified tuples.
Derivation derivation_from_k(const SyzygySystem& sys, const SolutionTuple& sol);

struct HyperplaneSplit {
  Derivation tangential;  // theta - k_i theta_E, annihilates alpha_i
  Polynomial scale;       // k_i
};

HyperplaneSplit split_wrt_hyperplane(const Arrangement& a, const Derivation& theta, std::size_t i);

/// Basis of the homogeneous degree-d solutions (k_1..k_ell) of equation j,
/// as vectors in (entry, descending graded-lex monomial) order.
std::vector<RationalVector> equation_solutions(const SyzygySystem& sys, std::size_t j, int degree);

/// True iff every degree-d solution of equation j lies in the span of
/// m * g over generators g in G_j and monomials m of complementary degree.
bool generators_span_solutions(const SyzygySystem& sys, std::size_t j, int degree);

}  // namespace logder

#endif  // LOGDER_SYZYGY_HPP
