#pragma once

#include <optional>
#include <vector>

#include "gptstat/basis.hpp"
#include "gptstat/physicality.hpp"

namespace gptstat {

// Two-mode beam splitter acting on q-deformed excitations. q interpolates
// between fermionic (-1) and bosonic (+1) exchange statistics.
class QuonModel {
 public:
  QuonModel(double q, double reflectivity);

  double q() const { return q_; }
  double reflectivity() const { return reflectivity_; }
  double transmissivity() const { return 1.0 - reflectivity_; }

 private:
  double q_;
  double reflectivity_;
};

// Squared norm v_n of the n-fold same-mode state: v_1 = 1, v_n = 1 + q v_{n-1}.
// v_2 = 1 + q vanishes at q = -1 (double occupancy is excluded).
double quon_norm(int n, double q);

// Output distributions for every input occupation of one or two quons in two
// modes. Single-quon rows are over basis(1,2), two-quon rows over basis(2,2).
// The (2,0)/(0,2) rows do not exist at q = -1: the input state itself has
// zero norm, so those accessors throw UnnormalizableStateError.
class QuonOutcomeTable {
 public:
  const QuonModel& model() const { return model_; }

  bool defined(const OccupationState& input) const;
  const std::vector<double>& distribution(const OccupationState& input) const;

 private:
  friend QuonOutcomeTable quon_statistics(const QuonModel& model);
  explicit QuonOutcomeTable(QuonModel model) : model_(model) {}

  QuonModel model_;
  std::vector<double> one_in_first_;   // input (1,0)
  std::vector<double> one_in_second_;  // input (0,1)
  std::optional<std::vector<double>> two_in_first_;   // input (2,0)
  std::vector<double> split_;                         // input (1,1)
  std::optional<std::vector<double>> two_in_second_;  // input (0,2)
};

QuonOutcomeTable quon_statistics(const QuonModel& model);

// The two-quon table in matrix form over basis(2,2). Needs q > -1 so every
// column exists.
TransitionMatrix quon_transition_matrix(const QuonModel& model);

// Single-quon matrix [[T, R], [R, T]] over basis(1,2).
TransitionMatrix quon_single_matrix(const QuonModel& model);

// Verifies the same-mode input distributions equal two independent
// single-quon draws: (T^2, 2RT, R^2) from (2,0) and mirrored from (0,2).
ConditionResult check_quon_evolution(const QuonModel& model,
                                     double tol = kDefaultTol);

// Max residual of removal-then-evolve vs evolve-then-remove between the
// two-quon and single-quon matrices. Reported as a number only; no verdict
// is attached.
double quon_no_interaction_residual(const QuonModel& model);

}  // namespace gptstat
