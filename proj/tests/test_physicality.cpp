#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gptstat/basis.hpp"
#include "gptstat/errors.hpp"
#include "gptstat/physicality.hpp"
#include "gptstat/quantum.hpp"
#include "gptstat/removal.hpp"

using namespace gptstat;

namespace {

TransitionMatrix pair_matrix(std::vector<double> rows) {
  const ModeBasis b = enumerate_basis(2, 2);
  return TransitionMatrix(b, b, std::move(rows));
}

const TransitionMatrix kSwapOrStay = pair_matrix(
    {0.5, 0.0, 0.5, 0.0, 1.0, 0.0, 0.5, 0.0, 0.5});

}  // namespace

TEST_CASE("single-particle family matrix") {
  const TransitionMatrix t = single_family_matrix(0.3);
  CHECK(t(0, 0) == 0.3);
  CHECK(t(1, 0) == 0.7);
  CHECK(t(0, 1) == 0.7);
  CHECK(t(1, 1) == 0.3);
  CHECK_THROWS_AS(single_family_matrix(1.2), DomainError);
}

TEST_CASE("family matrix hits the half-half values exactly") {
  const TransitionMatrix t = family_matrix(0.5);
  const double expected[] = {0.25, 0.5, 0.25, 0.5, 0.0, 0.5, 0.25, 0.5, 0.25};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(t(i, j) == expected[i * 3 + j]);
    }
  }
  CHECK_THROWS_AS(family_matrix(-0.01), DomainError);
}

TEST_CASE("family matrix first column is the stay distribution") {
  const TransitionMatrix t = family_matrix(0.25);
  CHECK(t(0, 0) == 0.0625);
  CHECK(t(1, 0) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(t(2, 0) == doctest::Approx(0.5625).epsilon(1e-15));
}

TEST_CASE("three-parameter form specializes to the named matrices") {
  CHECK(max_abs_difference(three_param_matrix(0.5, 0.0, 0.5), kSwapOrStay) ==
        0.0);
  const double beta = 0.3;
  CHECK(max_abs_difference(
            three_param_matrix(beta * beta, 2.0 * beta * (1.0 - beta), beta),
            family_matrix(beta)) < 1e-15);
}

TEST_CASE("three-parameter form rejects entries outside the unit interval") {
  CHECK_THROWS_AS(three_param_matrix(0.9, 0.2, 0.9), InfeasibleParamsError);
  CHECK_THROWS_AS(three_param_matrix(0.0, 0.0, 0.9), InfeasibleParamsError);
}

TEST_CASE("double stochasticity accepts the family and the swap-or-stay") {
  for (double beta : {0.0, 0.25, 0.5, 0.9, 1.0}) {
    CHECK(check_double_stochastic(family_matrix(beta)).pass);
  }
  CHECK(check_double_stochastic(kSwapOrStay).pass);
}

TEST_CASE("double stochasticity rejects a short column") {
  const TransitionMatrix bad = pair_matrix(
      {0.25, 0.5, 0.25, 0.25, 0.0, 0.5, 0.25, 0.5, 0.25});
  const ConditionResult r = check_double_stochastic(bad);
  CHECK_FALSE(r.pass);
  CHECK(r.max_deviation == doctest::Approx(0.25).epsilon(1e-12));
  CHECK_THROWS_AS(check_double_stochastic(removal_matrix(2, 2)),
                  StructuralError);
}

TEST_CASE("no-interaction holds along the family") {
  for (int i = 0; i <= 10; ++i) {
    const double beta = i / 10.0;
    const ConditionResult r =
        check_no_interaction(family_matrix(beta), single_family_matrix(beta));
    CHECK(r.pass);
    CHECK(r.max_deviation < 1e-15);
  }
}

TEST_CASE("no-interaction distinguishes the wrong single-particle matrix") {
  const ConditionResult r =
      check_no_interaction(family_matrix(0.3), single_family_matrix(0.4));
  CHECK_FALSE(r.pass);
  CHECK(r.max_deviation > 0.01);
}

TEST_CASE("no-interaction argument order is validated") {
  CHECK_THROWS_AS(
      check_no_interaction(single_family_matrix(0.5), family_matrix(0.5)),
      StructuralError);
}

TEST_CASE("swap-or-stay satisfies reduction but not evolution") {
  const TransitionMatrix one = single_family_matrix(0.5);
  CHECK(check_no_interaction(kSwapOrStay, one).pass);

  const EvolutionResult ev = check_evolution(kSwapOrStay, one);
  CHECK_FALSE(ev.pass);
  CHECK(ev.max_deviation == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(ev.witnesses.size() == 2);
  const EvolutionWitness& w = ev.witnesses[0];
  CHECK(w.input.counts == std::vector<int>{2, 0});
  CHECK(w.observed[0] == 0.5);
  CHECK(w.expected[0] == 0.25);
  CHECK(w.expected[1] == 0.5);
}

TEST_CASE("evolution holds along the family") {
  for (int i = 0; i <= 10; ++i) {
    const double beta = i / 10.0;
    const EvolutionResult ev =
        check_evolution(family_matrix(beta), single_family_matrix(beta));
    CHECK(ev.pass);
    CHECK(ev.witnesses.empty());
  }
}

TEST_CASE("evolution compares against the multinomial of independent draws") {
  // Three particles, two modes: the all-in-first-mode column must be the
  // binomial built from the single-particle first column.
  std::mt19937_64 rng(7);
  const ModeUnitary u = random_unitary(2, rng);
  const TransitionMatrix three = boson_transition_matrix(u, 3);
  const TransitionMatrix one = boson_transition_matrix(u, 1);
  const EvolutionResult ev = check_evolution(three, one);
  CHECK(ev.pass);
  CHECK(ev.max_deviation < 1e-12);
}

TEST_CASE("inferred single-particle matrix recovers the family parameter") {
  for (double beta : {0.0, 0.2, 0.5, 0.75, 1.0}) {
    const TransitionMatrix t1 = infer_single_particle(family_matrix(beta));
    CHECK(max_abs_difference(t1, single_family_matrix(beta)) < 1e-15);
  }
}

TEST_CASE("inferred single-particle matrix matches the quantum one") {
  std::mt19937_64 rng(11);
  for (int modes : {2, 3}) {
    const ModeUnitary u = random_unitary(modes, rng);
    const TransitionMatrix t1 =
        infer_single_particle(boson_transition_matrix(u, 3));
    CHECK(max_abs_difference(t1, boson_transition_matrix(u, 1)) < 1e-12);
  }
}

TEST_CASE("characterization accepts the family and reports its angle") {
  const PhysicalityReport quarter = characterize_2x2(family_matrix(0.25));
  CHECK(quarter.doubly_stochastic.pass);
  CHECK(quarter.no_interaction.pass);
  CHECK(quarter.evolution.pass);
  CHECK(quarter.realizable);
  REQUIRE(quarter.beta.has_value());
  CHECK(*quarter.beta == doctest::Approx(0.25).epsilon(1e-12));
  REQUIRE(quarter.theta.has_value());
  CHECK(*quarter.theta == doctest::Approx(std::asin(0.5)).epsilon(1e-12));

  const PhysicalityReport half = characterize_2x2(family_matrix(0.5));
  REQUIRE(half.theta.has_value());
  CHECK(*half.theta ==
        doctest::Approx(std::acos(-1.0) / 4.0).epsilon(1e-12));
}

TEST_CASE("characterization flags the swap-or-stay matrix") {
  const PhysicalityReport rep = characterize_2x2(kSwapOrStay);
  CHECK(rep.doubly_stochastic.pass);
  CHECK(rep.no_interaction.pass);
  REQUIRE(rep.beta.has_value());
  CHECK(*rep.beta == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_FALSE(rep.evolution.pass);
  CHECK_FALSE(rep.realizable);
  CHECK_FALSE(rep.theta.has_value());
  bool found = false;
  for (const EvolutionWitness& w : rep.evolution.witnesses) {
    if (w.input.counts == std::vector<int>{2, 0}) {
      found = true;
      CHECK(w.observed[0] == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(w.expected[0] == doctest::Approx(0.25).epsilon(1e-12));
    }
  }
  CHECK(found);
}

TEST_CASE("mixtures with the swap-or-stay stay unrealizable") {
  // Convex mixing preserves double stochasticity and the reduction identity
  // (both are linear) but the mixture is no longer a product evolution.
  const TransitionMatrix family = family_matrix(0.5);
  for (double lambda : {0.25, 0.5, 0.75}) {
    std::vector<double> rows(9);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        rows[i * 3 + j] =
            lambda * kSwapOrStay(i, j) + (1.0 - lambda) * family(i, j);
      }
    }
    const PhysicalityReport rep = characterize_2x2(pair_matrix(rows));
    CHECK(rep.doubly_stochastic.pass);
    CHECK(rep.no_interaction.pass);
    REQUIRE(rep.beta.has_value());
    CHECK(*rep.beta == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_FALSE(rep.evolution.pass);
    CHECK_FALSE(rep.realizable);
  }
}

TEST_CASE("characterization reports an infeasible implied parameter") {
  // Column sums far above one push the implied stay probability past 1.
  const TransitionMatrix bad =
      pair_matrix({1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0});
  const PhysicalityReport rep = characterize_2x2(bad);
  CHECK_FALSE(rep.doubly_stochastic.pass);
  CHECK_FALSE(rep.no_interaction.pass);
  CHECK_FALSE(rep.evolution.pass);
  CHECK_FALSE(rep.realizable);
  CHECK_FALSE(rep.beta.has_value());
}

TEST_CASE("characterization rejects foreign shapes") {
  CHECK_THROWS_AS(characterize_2x2(single_family_matrix(0.5)),
                  StructuralError);
  const ModeBasis b3 = enumerate_basis(2, 3);
  CHECK_THROWS_AS(characterize_2x2(TransitionMatrix::identity(b3)),
                  StructuralError);
}

TEST_CASE("doubly stochastic matrices outside the family are caught") {
  // Permutation matrix: doubly stochastic, but its implied single-particle
  // matrix does not reproduce it, so one of the later conditions fails.
  const TransitionMatrix perm =
      pair_matrix({0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0});
  const PhysicalityReport rep = characterize_2x2(perm);
  CHECK(rep.doubly_stochastic.pass);
  CHECK_FALSE(rep.realizable);
}
