#include <doctest.h>

#include <random>

#include "logder/error.hpp"
#include "logder/io.hpp"
#include "logder/syzygy.hpp"
#include "logder/ziegler.hpp"
#include "doctest_printers.hpp"
#include "test_support.hpp"

using namespace logder;
using logder::testing::arrangement;
using logder::testing::derivation;
using logder::testing::poly;

namespace {

SolutionTuple first_entries(const KTuple& k, std::size_t ell) {
  return {std::vector<Polynomial>(k.entries.begin(), k.entries.begin() + static_cast<std::ptrdiff_t>(ell)),
          std::nullopt};
}

}  // namespace

TEST_CASE("build_system") {
  const SyzygySystem x2 = build_system(load_arrangement(ziegler_x2_text()));
  CHECK(x2.ell == 3);
  CHECK(x2.n == 9);
  CHECK(x2.equation_count() == 6);
  CHECK(x2.coefficients(3) == std::vector<Rational>{1, 1, -1});
  CHECK(x2.coefficients(6) == std::vector<Rational>{2, -1, -2});
  CHECK_THROWS_AS(x2.coefficients(2), InputError);
  CHECK_THROWS_AS(x2.coefficients(9), InputError);

  CHECK(build_system(logder::testing::boolean_arrangement(3)).equation_count() == 0);
  CHECK(build_system(logder::testing::a2_arrangement()).coefficients(2) == std::vector<Rational>{1, -1});
  CHECK_THROWS_AS(build_system(arrangement(2, {{1, 1}, {1, -1}, {1, 0}})), InputError);
}

TEST_CASE("canonical_generators") {
  const SyzygySystem x2 = build_system(load_arrangement(ziegler_x2_text()));
  const GeneratorSet g = canonical_generators(x2, 3);
  CHECK(g.unit_members.empty());
  REQUIRE(g.koszul_members.size() == 3);
  CHECK(g.koszul_members[0].s == 0);
  CHECK(g.koszul_members[0].t == 1);
  CHECK(g.koszul_members[0].tuple.entries == std::vector<Polynomial>{poly("x2"), poly("-x1"), Polynomial(3)});
  CHECK(g.koszul_members[1].tuple.entries == std::vector<Polynomial>{poly("-x3"), Polynomial(3), poly("-x1")});
  CHECK(g.all().size() == 4);

  const SyzygySystem sparse = build_system(arrangement(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 3}}));
  const GeneratorSet h = canonical_generators(sparse, 3);
  REQUIRE(h.unit_members.size() == 1);
  CHECK(h.unit_members[0].r == 1);
  CHECK(h.unit_members[0].tuple.entries == std::vector<Polynomial>{Polynomial(3), poly("1"), Polynomial(3)});
  CHECK(h.koszul_members.size() == 1);

  for (std::size_t j = 3; j < 9; ++j) {
    const GeneratorSet set = canonical_generators(x2, j);
    const auto members = set.all();
    for (std::size_t m = 0; m < members.size(); ++m) {
      const Verification v = verify_solution(x2, members[m], j);
      CHECK(v.ok);
      REQUIRE(v.k_j.has_value());
      CHECK(*v.k_j == Polynomial::constant(3, m == 0 ? 1 : 0));
    }
  }
  CHECK_THROWS_AS(canonical_generators(x2, 0), InputError);
}

TEST_CASE("verify_solution") {
  const auto& z = emit_ziegler_fixture();
  const Arrangement x2 = z.x2;
  const SyzygySystem sys = build_system(x2);
  const SolutionTuple sol = first_entries(k_vector(x2, z.theta_z), 3);
  const Verification v = verify_solution(sys, sol, 3);
  CHECK(v.ok);
  REQUIRE(v.k_j.has_value());
  CHECK(*v.k_j == z.printed_q[0]);

  const SolutionTuple bad{{poly("x2"), Polynomial(3), Polynomial(3)}, std::nullopt};
  const Verification f = verify_solution(sys, bad, 3);
  CHECK_FALSE(f.ok);
  CHECK_FALSE(f.k_j.has_value());
  CHECK_THROWS_AS(complete_solution(sys, bad), PreconditionFailed);

  const SolutionTuple completed = complete_solution(sys, sol);
  REQUIRE(completed.completed.has_value());
  CHECK(*completed.completed == k_vector(x2, z.theta_z).entries);
}

TEST_CASE("derivation_from_k") {
  const auto& z = emit_ziegler_fixture();
  const SyzygySystem sys = build_system(z.x2);
  const SolutionTuple ones{std::vector<Polynomial>(3, Polynomial::constant(3, 1)), std::nullopt};
  CHECK(derivation_from_k(sys, ones) == euler_derivation(3));

  const SyzygySystem boolean = build_system(logder::testing::boolean_arrangement(2));
  const SolutionTuple sol{{poly("x2", 2), Polynomial(2)}, std::nullopt};
  const Derivation theta = derivation_from_k(boolean, sol);
  CHECK(theta == derivation({"x1*x2", "0"}));
  CHECK(is_logarithmic(logder::testing::boolean_arrangement(2), theta));

  const KTuple kz = k_vector(z.x2, z.theta_z);
  CHECK(derivation_from_k(sys, first_entries(kz, 3)) == z.theta_z);

  const SolutionTuple bad{{poly("x2"), Polynomial(3), Polynomial(3)}, std::nullopt};
  CHECK_THROWS_AS(derivation_from_k(sys, bad), PreconditionFailed);
}

TEST_CASE("k_vector and derivation_from_k invert each other on graded members") {
  const Arrangement b3 = logder::testing::b3_arrangement();
  const SyzygySystem sys = build_system(b3);
  for (int d = 1; d <= 4; ++d) {
    for (const auto& theta : graded_component(b3, d).members) {
      const KTuple k = k_vector(b3, theta);
      const SolutionTuple completed = complete_solution(sys, first_entries(k, 3));
      CHECK(*completed.completed == k.entries);
      CHECK(derivation_from_k(sys, completed) == theta);
    }
  }
}

TEST_CASE("split_wrt_hyperplane") {
  const auto& z = emit_ziegler_fixture();
  const HyperplaneSplit e = split_wrt_hyperplane(z.x2, euler_derivation(3), 5);
  CHECK(e.tangential.is_zero());
  CHECK(e.scale == Polynomial::constant(3, 1));

  const HyperplaneSplit s = split_wrt_hyperplane(z.x2, z.theta_z, 3);
  CHECK(s.scale == z.printed_q[0]);
  CHECK(apply(s.tangential, z.x2.form(3).to_polynomial()).is_zero());

  const HyperplaneSplit b = split_wrt_hyperplane(logder::testing::boolean_arrangement(2), derivation({"x1^2", "0"}), 0);
  CHECK(b.scale == poly("x1", 2));
  CHECK(b.tangential == derivation({"0", "-x1*x2"}));

  const Arrangement x2 = z.x2;
  for (int d = 1; d <= 5; d += 2) {
    for (const auto& theta : graded_component(x2, d).members) {
      for (std::size_t i = 0; i < x2.size(); ++i) {
        const HyperplaneSplit h = split_wrt_hyperplane(x2, theta, i);
        CHECK(h.tangential + h.scale * euler_derivation(3) == theta);
        CHECK(apply(h.tangential, x2.form(i).to_polynomial()).is_zero());
      }
    }
  }
  CHECK_THROWS_AS(split_wrt_hyperplane(logder::testing::boolean_arrangement(2), derivation({"x2", "0"}), 0),
                  NotLogarithmic);
}

TEST_CASE("canonical generators generate the bounded-degree solutions") {
  const SyzygySystem x2 = build_system(load_arrangement(ziegler_x2_text()));
  for (std::size_t j = 3; j < 9; ++j) {
    for (int d = 0; d <= 3; ++d) CHECK(generators_span_solutions(x2, j, d));
  }
  const SyzygySystem sparse = build_system(arrangement(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 3}}));
  for (int d = 0; d <= 3; ++d) CHECK(generators_span_solutions(sparse, 3, d));

  // Degree-1 solutions of x1 - x2 in two variables: (k1, k2) with
  // (x1 - x2) | k1 x1 - k2 x2. The space is e * S_1 + Koszul, dimension 3.
  const SyzygySystem a2 = build_system(logder::testing::a2_arrangement());
  CHECK(equation_solutions(a2, 2, 1).size() == 3);
  CHECK(equation_solutions(a2, 2, 0).size() == 1);
}
