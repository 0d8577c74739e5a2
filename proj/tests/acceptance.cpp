// Acceptance gate. One PASS/FAIL line per criterion; exit status is nonzero
// if any criterion fails. All arithmetic is exact, so every comparison below
// is equality and the only pinned tolerances are the runtime limits.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "logder/constraints.hpp"
#include "logder/error.hpp"
#include "logder/syzygy.hpp"
#include "logder/ziegler.hpp"
#include "test_support.hpp"

using namespace logder;

namespace {

constexpr double kMembershipSeconds = 1.0;
constexpr double kFreeFixtureSeconds = 30.0;
constexpr int kGeneratorTrials = 100;
constexpr std::size_t kGeneratorMaxEll = 4;
constexpr std::size_t kGeneratorMaxForms = 8;
constexpr long kGeneratorHeight = 5;
constexpr int kGeneratorSolutionDegree = 3;
constexpr std::size_t kMaxBooleanEll = 5;
constexpr int kShiftTrials = 20;
constexpr int kShiftDegree = 3;
constexpr int kCanonicalTrials = 50;
constexpr int kCanonicalDegree = 4;
constexpr int kSamplePoints = 50;
constexpr int kSearchHeight = 3;
constexpr std::uint64_t kSeed = 20240917;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_seconds(double s) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << s << " s";
  return out.str();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << title;
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
}

bool in_degree_piece(const Polynomial& p, int d) { return p.is_zero() || (p.is_homogeneous() && p.degree() == d); }

// theta' = lambda * theta for some nonzero rational lambda.
bool is_scalar_multiple(const Derivation& candidate, const Derivation& theta) {
  if (theta.is_zero() || candidate.is_zero()) return false;
  std::optional<Rational> lambda;
  for (std::size_t c = 0; c < theta.ell() && !lambda; ++c) {
    if (!theta[c].is_zero()) lambda = candidate[c].coefficient(theta[c].leading_term().first) / theta[c].leading_term().second;
  }
  return *lambda != 0 && *lambda * theta == candidate;
}

// Random rational point on the hyperplane alpha = 0.
RationalVector random_point_on(const LinearForm& alpha, std::mt19937_64& rng) {
  const RationalVector normal(alpha.coefficients().begin(), alpha.coefficients().end());
  RationalVector p(alpha.nvars());
  for (const auto& v : kernel_basis(RationalMatrix::from_rows({normal}, alpha.nvars()))) {
    const Rational t = logder::testing::random_rational(rng, 9) / static_cast<long>(1 + rng() % 5);
    for (std::size_t c = 0; c < p.size(); ++c) p[c] += t * v[c];
  }
  return p;
}

struct Fixture {
  std::string name;
  Arrangement arrangement;
  std::vector<Derivation> derivations;
};

// Every logarithmic derivation the gate works with, grouped by arrangement.
std::vector<Fixture> derivation_fixtures() {
  const ZieglerFixture& z = emit_ziegler_fixture();
  std::vector<Fixture> out;
  Fixture x2{"X2", z.x2, {z.theta_z, euler_derivation(3)}};
  for (int d = 1; d <= 5; ++d) {
    for (const auto& m : graded_component(z.x2, d).members) x2.derivations.push_back(m);
  }
  out.push_back(std::move(x2));

  const Arrangement b3 = logder::testing::b3_arrangement();
  out.push_back({"B3", b3, free_check(b3, 6).generators});

  for (std::size_t ell = 2; ell <= 3; ++ell) {
    out.push_back({"Boolean" + std::to_string(ell), logder::testing::boolean_arrangement(ell),
                   logder::testing::boolean_basis(ell)});
  }
  const Arrangement a2 = logder::testing::a2_arrangement();
  out.push_back({"A2", a2, graded_component(a2, 2).members});
  return out;
}

Outcome criterion_membership() {
  const auto start = Clock::now();
  const ZieglerFixture& z = emit_ziegler_fixture();
  const KTuple k = k_vector(z.x2, z.theta_z);
  const double elapsed = seconds_since(start);
  std::size_t zeros = 0;
  bool ok = k.entries.size() == 9;
  for (const auto& p : k.entries) {
    ok = ok && in_degree_piece(p, 4);
    if (p.is_zero()) ++zeros;
  }
  std::ostringstream s;
  s << "9/9 exact divisions, every k_i in S_4 (" << zeros << " identically zero), " << format_seconds(elapsed) << " < "
    << format_seconds(kMembershipSeconds);
  return {ok && elapsed < kMembershipSeconds, s.str()};
}

Outcome criterion_printed_quotients() {
  const ZieglerFixture& z = emit_ziegler_fixture();
  const KTuple k = k_vector(z.x2, z.theta_z);
  std::ostringstream diff;
  bool ok = true;
  for (std::size_t t = 0; t < 3; ++t) {
    const Polynomial delta = k.entries[3 + t] - z.printed_q[t];
    if (delta.is_zero()) continue;
    ok = false;
    diff << " q" << (t + 1) << ": computed - printed = " << to_string(delta) << ";";
  }
  if (ok) return {true, "k_4, k_5, k_6 equal the printed q_1, q_2, q_3 term for term"};
  return {false, "term diff:" + diff.str()};
}

Outcome criterion_critical_point() {
  const ZieglerFixture& z = emit_ziegler_fixture();
  const RationalVector c = logder::testing::point({2, 3, -1});
  bool ok = true;
  for (const auto& q : z.printed_q) ok = ok && eval_poly(q, c) == 0;
  ok = ok && point_in_complement(z.x2, c);
  const Rational qc = eval_poly(defining_polynomial(z.x2), c);
  std::ostringstream s;
  s << "q(2,3,-1) = (0,0,0), in complement, Q(X2)(2,3,-1) = " << to_string(qc);
  return {ok && qc == -7776, s.str()};
}

Outcome criterion_hidden_constraint() {
  const ZieglerFixture& z = emit_ziegler_fixture();
  const std::vector<std::size_t> basis = {3, 4, 5};
  const ConstraintRow row = hidden_constraint(z.x2, z.theta_z, logder::testing::point({2, 3, -1}), basis);
  const ContactTable table = contact_table(z.x2, monomial_decomposition(z.theta_z));
  const Rational value = row.evaluate(table);
  std::ostringstream s;
  s << row.coefficients.size() << " cells, coefficient " << to_string(row.coefficients.at({0, 3})) << " on c[1,4] and "
    << to_string(row.coefficients.at({17, 3})) << " on c[18,4], value on theta_z's table " << to_string(value);
  return {value == 0, s.str()};
}

Outcome criterion_degree_five() {
  const ZieglerFixture& z = emit_ziegler_fixture();
  const std::size_t dim = graded_component(z.x2, 5).dimension();
  const std::size_t euler = euler_multiple_dimension(3, 5);
  std::ostringstream s;
  s << "dim D(X2)_5 = " << dim << " > " << euler << " = dim S_4 theta_E";
  return {euler == 15 && dim > euler, s.str()};
}

Outcome criterion_generator_soundness() {
  std::mt19937_64 rng(kSeed);
  std::size_t members = 0;
  std::size_t equations = 0;
  std::size_t containment_checks = 0;
  for (int trial = 0; trial < kGeneratorTrials; ++trial) {
    const std::size_t ell = 2 + static_cast<std::size_t>(trial) % (kGeneratorMaxEll - 1);
    const std::size_t n = ell + 1 + rng() % (kGeneratorMaxForms - ell);
    const Arrangement a = logder::testing::random_arrangement(rng, ell, n, kGeneratorHeight, true);
    const SyzygySystem sys = build_system(a);
    for (std::size_t j = ell; j < n; ++j) {
      ++equations;
      const auto all = canonical_generators(sys, j).all();
      for (std::size_t m = 0; m < all.size(); ++m) {
        ++members;
        const Verification v = verify_solution(sys, all[m], j);
        if (!v.ok || !v.k_j || *v.k_j != Polynomial::constant(ell, m == 0 ? 1 : 0)) {
          return {false, "member " + std::to_string(m) + " of equation " + std::to_string(j + 1) + " in trial " +
                             std::to_string(trial) + " fails"};
        }
      }
      for (int d = 0; d <= kGeneratorSolutionDegree; ++d) {
        ++containment_checks;
        if (!generators_span_solutions(sys, j, d)) {
          return {false, "degree " + std::to_string(d) + " solutions of equation " + std::to_string(j + 1) +
                             " escape G_j in trial " + std::to_string(trial)};
        }
      }
    }
  }
  std::ostringstream s;
  s << kGeneratorTrials << " arrangements, " << equations << " equations, " << members
    << " members verified, " << containment_checks << " containment checks up to degree " << kGeneratorSolutionDegree;
  return {true, s.str()};
}

Outcome criterion_free_fixtures() {
  const auto start = Clock::now();
  bool ok = true;
  for (std::size_t ell = 1; ell <= kMaxBooleanEll; ++ell) {
    const SaitoResult r =
        saito_check(logder::testing::boolean_arrangement(ell), logder::testing::boolean_basis(ell));
    ok = ok && r.is_basis && r.scalar == 1;
  }
  const FreenessReport b3 = free_check(logder::testing::b3_arrangement(), 8);
  const bool b3_ok = b3.verdict == FreenessVerdict::free && b3.exponents == std::vector<int>{1, 3, 5} &&
                     b3.saito && b3.saito->is_basis;
  const double elapsed = seconds_since(start);
  std::ostringstream s;
  s << "Boolean ell<=" << kMaxBooleanEll << " c = 1; B3 exponents (";
  for (std::size_t i = 0; i < b3.exponents.size(); ++i) s << (i ? "," : "") << b3.exponents[i];
  s << ") " << to_string(b3.verdict) << "; " << format_seconds(elapsed) << " < " << format_seconds(kFreeFixtureSeconds);
  return {ok && b3_ok && elapsed < kFreeFixtureSeconds, s.str()};
}

Outcome criterion_basis_shift() {
  std::mt19937_64 rng(kSeed + 8);
  std::vector<std::pair<Arrangement, std::vector<Derivation>>> fixtures;
  for (std::size_t ell = 2; ell <= kMaxBooleanEll; ++ell) {
    std::vector<Derivation> basis = logder::testing::boolean_basis(ell);
    basis[0] = euler_derivation(ell);
    fixtures.emplace_back(logder::testing::boolean_arrangement(ell), std::move(basis));
  }
  const Arrangement b3 = logder::testing::b3_arrangement();
  fixtures.emplace_back(b3, free_check(b3, 6).generators);

  std::size_t shifts = 0;
  for (const auto& [a, basis] : fixtures) {
    const SaitoResult before = saito_check(a, basis);
    if (!before.is_basis) return {false, "fixture family is not a basis"};
    for (int trial = 0; trial < kShiftTrials; ++trial) {
      const std::size_t index = 1 + rng() % (a.ell() - 1);
      const Polynomial p = logder::testing::random_polynomial(rng, a.ell(), kShiftDegree, 5);
      const SaitoResult after = saito_check(a, basis_shift(basis, index, p));
      ++shifts;
      if (after.scalar != before.scalar || after.is_basis != before.is_basis) {
        return {false, "scalar changed from " + to_string(before.scalar) + " to " + to_string(after.scalar)};
      }
    }
  }
  return {true, std::to_string(fixtures.size()) + " free fixtures, " + std::to_string(shifts) +
                    " shifts, Saito scalar unchanged"};
}

Outcome criterion_canonical_invariance() {
  std::mt19937_64 rng(kSeed + 9);
  std::size_t comparisons = 0;
  for (int trial = 0; trial < kCanonicalTrials; ++trial) {
    const std::size_t ell = 2 + static_cast<std::size_t>(trial) % 3;
    const std::size_t n = ell + 1 + rng() % 4;
    const Arrangement a = logder::testing::random_arrangement(rng, ell, n, 3, false);
    const CanonicalForm c = to_canonical(a);
    std::vector<std::size_t> images(n);
    for (std::size_t p = 0; p < n; ++p) images[c.change.permutation[p]] = p;
    if (!verify_lattice_bijection(a, c.arrangement, images)) {
      return {false, "subset ranks differ in trial " + std::to_string(trial)};
    }
    for (int d = 0; d <= kCanonicalDegree; ++d) {
      ++comparisons;
      const std::size_t lhs = graded_component(a, d).dimension();
      const std::size_t rhs = graded_component(c.arrangement, d).dimension();
      if (lhs != rhs) {
        return {false, "trial " + std::to_string(trial) + " degree " + std::to_string(d) + ": " +
                           std::to_string(lhs) + " != " + std::to_string(rhs)};
      }
    }
  }
  return {true, std::to_string(kCanonicalTrials) + " arrangements, " + std::to_string(comparisons) +
                    " graded dimensions equal, all subset ranks preserved"};
}

Outcome criterion_constraint_soundness() {
  std::mt19937_64 rng(kSeed + 10);
  std::size_t derivations = 0;
  std::size_t rows = 0;
  std::size_t zero_rows = 0;
  std::size_t samples = 0;
  std::size_t sample_hits = 0;
  for (const auto& fx : derivation_fixtures()) {
    const Arrangement& a = fx.arrangement;
    for (const auto& theta : fx.derivations) {
      ++derivations;
      const MonomialDecomposition d = monomial_decomposition(theta);
      const ContactTable table = contact_table(a, d);
      std::vector<ConstraintRow> all = constraint_space(a, theta).rows;

      // Hidden rows at every complement zero the bounded scan finds, over
      // every independent choice of ell hyperplanes.
      for_each_subset(a.size(), a.ell(), [&](std::span<const std::size_t> basis) {
        if (basis.size() != a.ell() || subset_rank(a.forms(), basis) != a.ell()) return;
        const AssociatedField field = associated_field(a, theta, basis);
        for (const auto& c : search_critical_points(a, field, kSearchHeight).points) {
          all.push_back(hidden_constraint(a, theta, c, basis));
        }
      });
      for (const auto& row : all) {
        ++rows;
        if (row.evaluate(table) == 0) ++zero_rows;
      }

      for (std::size_t i = 0; i < a.size(); ++i) {
        for (int s = 0; s < kSamplePoints; ++s) {
          const RationalVector p = random_point_on(a.form(i), rng);
          Rational total;
          for (std::size_t k = 0; k < d.size(); ++k) total += d.monomials[k].evaluate(p) * table(k, i);
          ++samples;
          if (total == 0) ++sample_hits;
        }
      }
    }
  }
  std::ostringstream s;
  s << derivations << " derivations, " << zero_rows << "/" << rows << " rows vanish, " << sample_hits << "/"
    << samples << " hyperplane samples vanish";
  return {zero_rows == rows && sample_hits == samples, s.str()};
}

Outcome criterion_transport() {
  std::size_t count = 0;
  for (const auto& fx : derivation_fixtures()) {
    std::vector<std::size_t> identity(fx.arrangement.size());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
    for (const auto& theta : fx.derivations) {
      ++count;
      const TransportResult r = transport_derivation(fx.arrangement, fx.arrangement, identity, theta);
      if (r.solution_dim < 1 || !r.witness || !is_scalar_multiple(*r.witness, theta)) {
        return {false, "derivation " + std::to_string(count) + " on " + fx.name + " is not reproduced"};
      }
    }
  }
  return {true, std::to_string(count) + " derivations reproduced up to a nonzero scalar"};
}

}  // namespace

int main() {
  report(1, "Ziegler membership", criterion_membership);
  report(2, "printed-quotient agreement", criterion_printed_quotients);
  report(3, "critical point (2,3,-1)", criterion_critical_point);
  report(4, "hidden constraint", criterion_hidden_constraint);
  report(5, "degree-5 dimension", criterion_degree_five);
  report(6, "canonical generator soundness", criterion_generator_soundness);
  report(7, "free fixtures", criterion_free_fixtures);
  report(8, "basis-shift invariance", criterion_basis_shift);
  report(9, "canonical-form invariance", criterion_canonical_invariance);
  report(10, "constraint soundness", criterion_constraint_soundness);
  report(11, "transport round trip", criterion_transport);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
