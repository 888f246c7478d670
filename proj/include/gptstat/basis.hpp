#pragma once

// Occupation-number bases for N identical particles in M modes, plus the
// probability vectors and stochastic transition matrices indexed by them.
//
// Every basis in the toolkit is the canonical one produced by
// enumerate_basis(): all compositions of N into M parts, ordered
// reverse-lexicographically on the counts tuple (descending n1, then
// descending n2, ...). For N = 2, M = 2 this is (2,0), (1,1), (0,2).
// All matrices and vectors are meaningful only relative to this ordering,
// and it is serialized alongside them.

#include <cstdint>
#include <string>
#include <vector>

#include "gptstat/errors.hpp"

namespace gptstat {

inline constexpr double kDefaultTol = 1e-9;

// Particle counts per mode; sum(counts) is the particle number.
struct OccupationState {
  std::vector<int> counts;

  int total() const;
  int modes() const { return static_cast<int>(counts.size()); }
  std::string str() const;  // "(2,0)"

  bool operator==(const OccupationState&) const = default;
};

// Canonical ordered basis of all occupation states for fixed (N, M).
class ModeBasis {
 public:
  ModeBasis(int particles, int modes);

  int particles() const { return particles_; }
  int modes() const { return modes_; }
  int size() const { return static_cast<int>(states_.size()); }
  const std::vector<OccupationState>& states() const { return states_; }
  const OccupationState& state(int index) const { return states_.at(index); }

  // Position of `state` in the canonical order; NotFoundError if it does not
  // belong to this basis (wrong length, wrong total, or not a member).
  int index_of(const OccupationState& state) const;

  // Two bases are interchangeable iff (N, M) agree: the ordering is canonical.
  bool same_space(const ModeBasis& other) const {
    return particles_ == other.particles_ && modes_ == other.modes_;
  }

 private:
  int particles_;
  int modes_;
  std::vector<OccupationState> states_;
};

ModeBasis enumerate_basis(int particles, int modes);
int index_of(const OccupationState& state, const ModeBasis& basis);

// Probability distribution over a basis. Entries in [-tol, 0) are clamped to
// zero at construction; entries below -tol or a total off 1 beyond tol are
// rejected.
class ProbVector {
 public:
  ProbVector(ModeBasis basis, std::vector<double> p, double tol = kDefaultTol);

  const ModeBasis& basis() const { return basis_; }
  const std::vector<double>& values() const { return p_; }
  double operator[](int i) const { return p_.at(i); }
  int size() const { return static_cast<int>(p_.size()); }

 private:
  ModeBasis basis_;
  std::vector<double> p_;
};

// Real matrix mapping distributions over input_basis to distributions over
// output_basis. Rows index output states, columns input states. Stored
// row-major. Construction checks shape only; stochasticity is judged by
// validate_stochastic so that broken candidate matrices can be loaded and
// then reported on.
class TransitionMatrix {
 public:
  TransitionMatrix(ModeBasis input_basis, ModeBasis output_basis,
                   std::vector<double> row_major);

  static TransitionMatrix zero(ModeBasis input_basis, ModeBasis output_basis);
  static TransitionMatrix identity(ModeBasis basis);

  const ModeBasis& input_basis() const { return input_; }
  const ModeBasis& output_basis() const { return output_; }
  int rows() const { return output_.size(); }
  int cols() const { return input_.size(); }
  bool square() const { return input_.same_space(output_); }

  double operator()(int row, int col) const {
    return entries_[static_cast<size_t>(row) * cols() + col];
  }
  double& at(int row, int col) {
    return entries_[static_cast<size_t>(row) * cols() + col];
  }
  const std::vector<double>& entries() const { return entries_; }

  std::vector<double> column(int col) const;
  double row_sum(int row) const;
  double column_sum(int col) const;

 private:
  ModeBasis input_;
  ModeBasis output_;
  std::vector<double> entries_;
};

struct StochasticityReport {
  bool pass = false;
  double max_column_deviation = 0.0;  // max |column sum - 1|
  double min_entry = 0.0;
  double max_entry = 0.0;
};

// Column stochasticity: every column sums to 1 within tol and entries are
// >= -tol. Deviations are reported either way.
StochasticityReport validate_stochastic(const TransitionMatrix& t,
                                        double tol = kDefaultTol);

// Matrix product a * b; a.input_basis must equal b.output_basis.
TransitionMatrix compose(const TransitionMatrix& a, const TransitionMatrix& b);

// Image of p under t, validated as a ProbVector.
ProbVector apply(const TransitionMatrix& t, const ProbVector& p,
                 double tol = kDefaultTol);

// Entrywise max |a - b|; StructuralError unless shapes agree.
double max_abs_difference(const TransitionMatrix& a, const TransitionMatrix& b);

}  // namespace gptstat
