#include "gptstat/physicality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

#include "gptstat/removal.hpp"

namespace gptstat {

namespace {

// Exact for n <= 20; evolution checks never need more (the quantum engine
// rejects larger particle numbers for the same reason).
constexpr int kMaxFactorial = 20;

double factorial_as_double(int n) {
  if (n < 0 || n > kMaxFactorial) {
    throw DomainError("factorial table covers 0..20, got " +
                      std::to_string(n));
  }
  static const auto table = [] {
    std::array<double, kMaxFactorial + 1> t{};
    std::uint64_t f = 1;
    t[0] = 1.0;
    for (int i = 1; i <= kMaxFactorial; ++i) {
      f *= static_cast<std::uint64_t>(i);
      t[i] = static_cast<double>(f);
    }
    return t;
  }();
  return table[n];
}

// P(t | N draws from column probs) = N!/(prod t_j!) prod probs_j^{t_j}.
double multinomial_probability(const OccupationState& target,
                               const std::vector<double>& probs,
                               int particles) {
  double p = factorial_as_double(particles);
  for (int j = 0; j < target.modes(); ++j) {
    p /= factorial_as_double(target.counts[j]);
    for (int rep = 0; rep < target.counts[j]; ++rep) p *= probs[j];
  }
  return p;
}

OccupationState all_in_mode(int mode, int particles, int modes) {
  OccupationState s{std::vector<int>(modes, 0)};
  s.counts[mode] = particles;
  return s;
}

void require_square_same_modes(const TransitionMatrix& t_n,
                               const TransitionMatrix& t_low,
                               const char* where) {
  if (!t_n.square() || !t_low.square()) {
    throw StructuralError(std::string(where) + ": both matrices must be square");
  }
  if (t_n.input_basis().modes() != t_low.input_basis().modes()) {
    throw StructuralError(std::string(where) + ": mode counts disagree");
  }
}

}  // namespace

ConditionResult check_double_stochastic(const TransitionMatrix& t,
                                        double tol) {
  if (!t.square()) {
    throw StructuralError("check_double_stochastic: matrix is not square");
  }
  ConditionResult r;
  for (int i = 0; i < t.rows(); ++i) {
    r.max_deviation = std::max(r.max_deviation, std::abs(t.row_sum(i) - 1.0));
    r.max_deviation =
        std::max(r.max_deviation, std::abs(t.column_sum(i) - 1.0));
  }
  for (double v : t.entries()) {
    if (v < 0.0) r.max_deviation = std::max(r.max_deviation, -v);
    if (v > 1.0) r.max_deviation = std::max(r.max_deviation, v - 1.0);
  }
  r.pass = r.max_deviation <= tol;
  return r;
}

ConditionResult check_no_interaction(const TransitionMatrix& t_n,
                                     const TransitionMatrix& t_k,
                                     double tol) {
  require_square_same_modes(t_n, t_k, "check_no_interaction");
  const int n = t_n.input_basis().particles();
  const int k = t_k.input_basis().particles();
  if (k >= n) {
    throw StructuralError("check_no_interaction: need K < N, got N=" +
                          std::to_string(n) + " K=" + std::to_string(k));
  }
  const TransitionMatrix chain =
      removal_chain(n, k, t_n.input_basis().modes());
  ConditionResult r;
  r.max_deviation =
      max_abs_difference(compose(chain, t_n), compose(t_k, chain));
  r.pass = r.max_deviation < tol;
  return r;
}

EvolutionResult check_evolution(const TransitionMatrix& t_n,
                                const TransitionMatrix& t_1, double tol) {
  require_square_same_modes(t_n, t_1, "check_evolution");
  if (t_1.input_basis().particles() != 1) {
    throw StructuralError("check_evolution: second argument must act on the "
                          "single-particle basis");
  }
  const int particles = t_n.input_basis().particles();
  const int modes = t_n.input_basis().modes();
  const ModeBasis& basis_n = t_n.input_basis();
  const ModeBasis& basis_1 = t_1.input_basis();

  EvolutionResult result;
  result.pass = true;
  for (int m = 0; m < modes; ++m) {
    const OccupationState input = all_in_mode(m, particles, modes);
    const int col = basis_n.index_of(input);
    // Column m of t_1, indexed by mode rather than basis position.
    std::vector<double> single(modes);
    for (int j = 0; j < modes; ++j) {
      single[j] = t_1(basis_1.index_of(all_in_mode(j, 1, modes)),
                      basis_1.index_of(all_in_mode(m, 1, modes)));
    }
    std::vector<double> observed = t_n.column(col);
    std::vector<double> expected(basis_n.size());
    double dev = 0.0;
    for (int r = 0; r < basis_n.size(); ++r) {
      expected[r] = multinomial_probability(basis_n.state(r), single, particles);
      dev = std::max(dev, std::abs(observed[r] - expected[r]));
    }
    result.max_deviation = std::max(result.max_deviation, dev);
    if (dev >= tol) {
      result.pass = false;
      result.witnesses.push_back(
          EvolutionWitness{input, std::move(observed), std::move(expected)});
    }
  }
  return result;
}

TransitionMatrix single_family_matrix(double beta) {
  if (beta < 0.0 || beta > 1.0) {
    throw DomainError("single_family_matrix: beta must be in [0,1], got " +
                      std::to_string(beta));
  }
  ModeBasis b = enumerate_basis(1, 2);
  return TransitionMatrix(b, b, {beta, 1.0 - beta, 1.0 - beta, beta});
}

TransitionMatrix three_param_matrix(double alpha1, double alpha2, double beta,
                                    double tol) {
  const std::vector<double> rows = {
      alpha1,                  alpha2,           1.0 - alpha1 - alpha2,
      2.0 * (beta - alpha1),   1.0 - 2.0 * alpha2, 2.0 * (-beta + alpha1 + alpha2),
      1.0 + alpha1 - 2.0 * beta, alpha2,         2.0 * beta - alpha1 - alpha2};
  for (int i = 0; i < 9; ++i) {
    if (rows[i] < -tol || rows[i] > 1.0 + tol) {
      throw InfeasibleParamsError(
          "three_param_matrix: entry (" + std::to_string(i / 3) + "," +
          std::to_string(i % 3) + ") = " + std::to_string(rows[i]) +
          " outside [0,1] for alpha1=" + std::to_string(alpha1) +
          " alpha2=" + std::to_string(alpha2) +
          " beta=" + std::to_string(beta));
    }
  }
  ModeBasis b = enumerate_basis(2, 2);
  return TransitionMatrix(b, b, rows);
}

TransitionMatrix family_matrix(double beta) {
  if (beta < 0.0 || beta > 1.0) {
    throw DomainError("family_matrix: beta must be in [0,1], got " +
                      std::to_string(beta));
  }
  const double cross = 2.0 * beta * (1.0 - beta);
  const double anti = (1.0 - beta) * (1.0 - beta);
  ModeBasis b = enumerate_basis(2, 2);
  return TransitionMatrix(b, b,
                          {beta * beta, cross, anti,
                           cross, 1.0 - 2.0 * cross, cross,
                           anti, cross, beta * beta});
}

TransitionMatrix infer_single_particle(const TransitionMatrix& t) {
  if (!t.square()) {
    throw StructuralError("infer_single_particle: matrix is not square");
  }
  const int particles = t.input_basis().particles();
  const int modes = t.input_basis().modes();
  if (particles < 2) {
    throw StructuralError("infer_single_particle: need N >= 2");
  }
  const TransitionMatrix chain = removal_chain(particles, 1, modes);
  const ModeBasis basis_1 = enumerate_basis(1, modes);
  TransitionMatrix t1 = TransitionMatrix::zero(basis_1, basis_1);
  for (int m = 0; m < modes; ++m) {
    const int col =
        t.input_basis().index_of(all_in_mode(m, particles, modes));
    const int col1 = basis_1.index_of(all_in_mode(m, 1, modes));
    for (int r = 0; r < basis_1.size(); ++r) {
      double v = 0.0;
      for (int k = 0; k < t.rows(); ++k) v += chain(r, k) * t(k, col);
      t1.at(r, col1) = v;
    }
  }
  return t1;
}

PhysicalityReport characterize_2x2(const TransitionMatrix& t2, double tol) {
  if (!t2.square() || t2.input_basis().particles() != 2 ||
      t2.input_basis().modes() != 2) {
    throw StructuralError(
        "characterize_2x2: expected a 3x3 matrix over the two-particle "
        "two-mode basis");
  }
  PhysicalityReport report;
  report.doubly_stochastic = check_double_stochastic(t2, tol);

  // No-interaction forces alpha3 = 2(beta - alpha1); invert it for beta.
  // Linear, and defined even when the evolution condition fails.
  const double alpha1 = t2(0, 0);
  const double alpha3 = t2(1, 0);
  double beta = alpha1 + alpha3 / 2.0;
  if (beta < -tol || beta > 1.0 + tol) {
    report.no_interaction.pass = false;
    report.no_interaction.max_deviation =
        beta < 0.0 ? -beta : beta - 1.0;
    report.no_interaction.detail =
        "implied single-particle parameter " + std::to_string(beta) +
        " outside [0,1]: no valid single-particle counterpart";
    report.evolution.pass = false;
    report.evolution.detail =
        "not evaluated: no feasible single-particle counterpart";
    report.realizable = false;
    return report;
  }
  beta = std::clamp(beta, 0.0, 1.0);
  report.beta = beta;

  const TransitionMatrix t1 = single_family_matrix(beta);
  report.no_interaction = check_no_interaction(t2, t1, tol);
  report.evolution = check_evolution(t2, t1, tol);

  if (report.doubly_stochastic.pass && report.no_interaction.pass &&
      report.evolution.pass) {
    const double family_dev = max_abs_difference(t2, family_matrix(beta));
    if (family_dev <= tol) {
      report.realizable = true;
      report.theta = std::asin(std::sqrt(beta));
    } else {
      report.evolution.detail =
          "conditions pass but matrix deviates from the one-parameter family "
          "by " + std::to_string(family_dev);
    }
  }
  return report;
}

}  // namespace gptstat
