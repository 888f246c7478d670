#pragma once

// The three physicality conditions for transformations of noninteracting
// identical particles (double stochasticity, no-interaction, the evolution
// principle), the constrained matrix families they carve out for two
// particles in two modes, and the inverse characterization that maps an
// arbitrary candidate matrix to its single-particle parameter beta or to a
// refutation witness.

#include <optional>
#include <string>
#include <vector>

#include "gptstat/basis.hpp"

namespace gptstat {

struct ConditionResult {
  bool pass = false;
  double max_deviation = 0.0;
  std::string detail;  // set when the condition could not be evaluated
};

// One reproducible evolution-principle failure: the all-in-one-mode input
// state, the column the matrix actually maps it to, and the multinomial
// column the single-particle map demands.
struct EvolutionWitness {
  OccupationState input;
  std::vector<double> observed;
  std::vector<double> expected;
};

struct EvolutionResult {
  bool pass = false;
  double max_deviation = 0.0;
  std::vector<EvolutionWitness> witnesses;
  std::string detail;
};

struct PhysicalityReport {
  ConditionResult doubly_stochastic;
  ConditionResult no_interaction;
  EvolutionResult evolution;
  std::optional<double> beta;   // inferred single-particle parameter
  bool realizable = false;
  std::optional<double> theta;  // angle with beta = sin^2(theta), radians
};

// Rows and columns each sum to 1 within tol and entries lie in
// [-tol, 1 + tol]. StructuralError unless the matrix is square.
ConditionResult check_double_stochastic(const TransitionMatrix& t,
                                        double tol = kDefaultTol);

// No-interaction: R^(N->K) T^(N) == T^(K) R^(N->K) as matrices, which is
// equality on every input state. Reports the max entrywise residual.
ConditionResult check_no_interaction(const TransitionMatrix& t_n,
                                     const TransitionMatrix& t_k,
                                     double tol = kDefaultTol);

// Evolution principle: for every mode m, the column of t_n at the
// all-N-particles-in-mode-m input state must equal the multinomial
// distribution of N independent single-particle draws from column m of t_1.
// For N = 2 this is exactly the product-distribution statement.
EvolutionResult check_evolution(const TransitionMatrix& t_n,
                                const TransitionMatrix& t_1,
                                double tol = kDefaultTol);

// [[beta, 1-beta], [1-beta, beta]] over basis(1, 2).
TransitionMatrix single_family_matrix(double beta);

// The doubly stochastic 3x3 family over basis(2, 2) left after imposing
// no-interaction against single_family_matrix(beta):
//   [ a1          a2          1-a1-a2      ]
//   [ 2(beta-a1)  1-2 a2      2(-beta+a1+a2) ]
//   [ 1+a1-2 beta a2          2 beta-a1-a2 ]
// InfeasibleParamsError (naming the entry) if any entry leaves [0, 1]
// beyond tol.
TransitionMatrix three_param_matrix(double alpha1, double alpha2, double beta,
                                    double tol = kDefaultTol);

// The one-parameter family satisfying all three conditions:
//   [ b^2         2b(1-b)     (1-b)^2 ]
//   [ 2b(1-b)     1-4b(1-b)   2b(1-b) ]
//   [ (1-b)^2     2b(1-b)     b^2     ]
TransitionMatrix family_matrix(double beta);

// Single-particle matrix implied by the marginals of t: column m of the
// result is R^(N->1) applied to t's all-in-mode-m column. When t satisfies
// no-interaction this recovers its single-particle counterpart exactly; for
// a 3x3 candidate over basis(2,2) the implied beta is a1 + a3/2.
TransitionMatrix infer_single_particle(const TransitionMatrix& t);

// Full verdict for a 3x3 candidate over basis(2, 2): double stochasticity,
// beta inference (clamped to [0,1] only within tol of the boundary, else the
// no-interaction condition is reported infeasible), no-interaction and
// evolution against single_family_matrix(beta), and the realizability
// dichotomy: realizable iff the matrix equals family_matrix(beta), with
// theta = arcsin(sqrt(beta)).
PhysicalityReport characterize_2x2(const TransitionMatrix& t2,
                                   double tol = kDefaultTol);

}  // namespace gptstat
