#include "gptstat/quon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gptstat/errors.hpp"
#include "gptstat/removal.hpp"

namespace gptstat {

namespace {

bool is_state(const OccupationState& s, int first, int second) {
  return s.counts.size() == 2 && s.counts[0] == first && s.counts[1] == second;
}

}  // namespace

QuonModel::QuonModel(double q, double reflectivity)
    : q_(q), reflectivity_(reflectivity) {
  if (!(q >= -1.0 && q <= 1.0)) {
    throw DomainError("QuonModel: q = " + std::to_string(q) +
                      " outside [-1, 1]");
  }
  if (!(reflectivity >= 0.0 && reflectivity <= 1.0)) {
    throw DomainError("QuonModel: reflectivity = " +
                      std::to_string(reflectivity) + " outside [0, 1]");
  }
}

double quon_norm(int n, double q) {
  if (n < 1) {
    throw DomainError("quon_norm: n = " + std::to_string(n) + " < 1");
  }
  if (!(q >= -1.0 && q <= 1.0)) {
    throw DomainError("quon_norm: q = " + std::to_string(q) +
                      " outside [-1, 1]");
  }
  double v = 1.0;
  for (int i = 2; i <= n; ++i) v = 1.0 + q * v;
  return v;
}

bool QuonOutcomeTable::defined(const OccupationState& input) const {
  if (is_state(input, 1, 0) || is_state(input, 0, 1) || is_state(input, 1, 1)) {
    return true;
  }
  if (is_state(input, 2, 0)) return two_in_first_.has_value();
  if (is_state(input, 0, 2)) return two_in_second_.has_value();
  return false;
}

const std::vector<double>& QuonOutcomeTable::distribution(
    const OccupationState& input) const {
  if (is_state(input, 1, 0)) return one_in_first_;
  if (is_state(input, 0, 1)) return one_in_second_;
  if (is_state(input, 1, 1)) return split_;
  if (is_state(input, 2, 0) || is_state(input, 0, 2)) {
    const auto& row = is_state(input, 2, 0) ? two_in_first_ : two_in_second_;
    if (!row.has_value()) {
      throw UnnormalizableStateError(
          "quon input " + input.str() +
          " has zero norm at q = -1; the distribution is undefined");
    }
    return *row;
  }
  throw NotFoundError("quon table has no input " + input.str());
}

QuonOutcomeTable quon_statistics(const QuonModel& model) {
  const double q = model.q();
  const double r = model.reflectivity();
  const double t = model.transmissivity();

  QuonOutcomeTable table(model);
  table.one_in_first_ = {t, r};
  table.one_in_second_ = {r, t};
  // Over basis(2,2) order (2,0), (1,1), (0,2).
  table.split_ = {r * t * (1.0 + q), r * r + t * t - 2.0 * q * r * t,
                  r * t * (1.0 + q)};
  if (quon_norm(2, q) > 0.0) {
    table.two_in_first_ = std::vector<double>{t * t, 2.0 * r * t, r * r};
    table.two_in_second_ = std::vector<double>{r * r, 2.0 * r * t, t * t};
  }
  return table;
}

TransitionMatrix quon_transition_matrix(const QuonModel& model) {
  const QuonOutcomeTable table = quon_statistics(model);
  const ModeBasis basis = enumerate_basis(2, 2);
  TransitionMatrix m = TransitionMatrix::zero(basis, basis);
  for (int col = 0; col < basis.size(); ++col) {
    const std::vector<double>& dist = table.distribution(basis.state(col));
    for (int row = 0; row < basis.size(); ++row) m.at(row, col) = dist[row];
  }
  return m;
}

TransitionMatrix quon_single_matrix(const QuonModel& model) {
  const double r = model.reflectivity();
  const double t = model.transmissivity();
  const ModeBasis basis = enumerate_basis(1, 2);
  return TransitionMatrix(basis, basis, {t, r, r, t});
}

ConditionResult check_quon_evolution(const QuonModel& model, double tol) {
  const QuonOutcomeTable table = quon_statistics(model);
  const double r = model.reflectivity();
  const double t = model.transmissivity();

  double dev = 0.0;
  const OccupationState in_first{{2, 0}};
  const std::vector<double> product_first = {t * t, 2.0 * r * t, r * r};
  const std::vector<double>& obs_first = table.distribution(in_first);
  for (size_t i = 0; i < product_first.size(); ++i) {
    dev = std::max(dev, std::abs(obs_first[i] - product_first[i]));
  }
  const OccupationState in_second{{0, 2}};
  const std::vector<double> product_second = {r * r, 2.0 * r * t, t * t};
  const std::vector<double>& obs_second = table.distribution(in_second);
  for (size_t i = 0; i < product_second.size(); ++i) {
    dev = std::max(dev, std::abs(obs_second[i] - product_second[i]));
  }

  ConditionResult result;
  result.pass = dev < tol;
  result.max_deviation = dev;
  result.detail = result.pass
                      ? "same-mode inputs match independent single-quon draws"
                      : "same-mode input deviates from independent draws";
  return result;
}

double quon_no_interaction_residual(const QuonModel& model) {
  const TransitionMatrix two = quon_transition_matrix(model);
  const TransitionMatrix one = quon_single_matrix(model);
  const TransitionMatrix chain = removal_matrix(2, 2);
  return max_abs_difference(compose(chain, two), compose(one, chain));
}

}  // namespace gptstat
