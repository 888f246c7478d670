#include "gptstat/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace gptstat {

int OccupationState::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

std::string OccupationState::str() const {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) out << ',';
    out << counts[i];
  }
  out << ')';
  return out.str();
}

namespace {

// Compositions of `remaining` into `modes_left` parts, emitted with the
// leading count descending so the full list comes out in reverse-lex order.
void emit_compositions(int remaining, int modes_left, std::vector<int>& prefix,
                       std::vector<OccupationState>& out) {
  if (modes_left == 1) {
    prefix.push_back(remaining);
    out.push_back(OccupationState{prefix});
    prefix.pop_back();
    return;
  }
  for (int n = remaining; n >= 0; --n) {
    prefix.push_back(n);
    emit_compositions(remaining - n, modes_left - 1, prefix, out);
    prefix.pop_back();
  }
}

// Reverse-lex: a precedes b iff a.counts > b.counts lexicographically.
bool precedes(const OccupationState& a, const OccupationState& b) {
  return std::lexicographical_compare(b.counts.begin(), b.counts.end(),
                                      a.counts.begin(), a.counts.end());
}

}  // namespace

ModeBasis::ModeBasis(int particles, int modes)
    : particles_(particles), modes_(modes) {
  if (particles < 1) {
    throw DomainError("ModeBasis: particle count must be >= 1, got " +
                      std::to_string(particles));
  }
  if (modes < 1) {
    throw DomainError("ModeBasis: mode count must be >= 1, got " +
                      std::to_string(modes));
  }
  std::vector<int> prefix;
  prefix.reserve(modes);
  emit_compositions(particles, modes, prefix, states_);
}

int ModeBasis::index_of(const OccupationState& state) const {
  if (state.modes() != modes_ || state.total() != particles_) {
    throw NotFoundError("state " + state.str() + " does not belong to basis(" +
                        std::to_string(particles_) + "," +
                        std::to_string(modes_) + ")");
  }
  auto it = std::lower_bound(states_.begin(), states_.end(), state, precedes);
  if (it == states_.end() || !(*it == state)) {
    throw NotFoundError("state " + state.str() + " not found in basis(" +
                        std::to_string(particles_) + "," +
                        std::to_string(modes_) + ")");
  }
  return static_cast<int>(it - states_.begin());
}

ModeBasis enumerate_basis(int particles, int modes) {
  return ModeBasis(particles, modes);
}

int index_of(const OccupationState& state, const ModeBasis& basis) {
  return basis.index_of(state);
}

ProbVector::ProbVector(ModeBasis basis, std::vector<double> p, double tol)
    : basis_(std::move(basis)), p_(std::move(p)) {
  if (static_cast<int>(p_.size()) != basis_.size()) {
    throw StructuralError("ProbVector: " + std::to_string(p_.size()) +
                          " entries for a basis of size " +
                          std::to_string(basis_.size()));
  }
  double sum = 0.0;
  for (double& v : p_) {
    if (v < -tol) {
      throw DomainError("ProbVector: entry " + std::to_string(v) +
                        " below -tol");
    }
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw DomainError("ProbVector: entries sum to " + std::to_string(sum) +
                      ", expected 1");
  }
}

TransitionMatrix::TransitionMatrix(ModeBasis input_basis,
                                   ModeBasis output_basis,
                                   std::vector<double> row_major)
    : input_(std::move(input_basis)),
      output_(std::move(output_basis)),
      entries_(std::move(row_major)) {
  const size_t expected =
      static_cast<size_t>(input_.size()) * static_cast<size_t>(output_.size());
  if (entries_.size() != expected) {
    throw StructuralError(
        "TransitionMatrix: " + std::to_string(entries_.size()) +
        " entries, expected " + std::to_string(expected) + " (" +
        std::to_string(output_.size()) + "x" + std::to_string(input_.size()) +
        ")");
  }
}

TransitionMatrix TransitionMatrix::zero(ModeBasis input_basis,
                                        ModeBasis output_basis) {
  std::vector<double> e(static_cast<size_t>(input_basis.size()) *
                        output_basis.size());
  return TransitionMatrix(std::move(input_basis), std::move(output_basis),
                          std::move(e));
}

TransitionMatrix TransitionMatrix::identity(ModeBasis basis) {
  const int n = basis.size();
  std::vector<double> e(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = 1.0;
  ModeBasis copy = basis;
  return TransitionMatrix(std::move(copy), std::move(basis), std::move(e));
}

std::vector<double> TransitionMatrix::column(int col) const {
  std::vector<double> out(rows());
  for (int r = 0; r < rows(); ++r) out[r] = (*this)(r, col);
  return out;
}

double TransitionMatrix::row_sum(int row) const {
  double s = 0.0;
  for (int c = 0; c < cols(); ++c) s += (*this)(row, c);
  return s;
}

double TransitionMatrix::column_sum(int col) const {
  double s = 0.0;
  for (int r = 0; r < rows(); ++r) s += (*this)(r, col);
  return s;
}

StochasticityReport validate_stochastic(const TransitionMatrix& t,
                                        double tol) {
  StochasticityReport report;
  report.min_entry = t.entries().empty() ? 0.0 : t.entries().front();
  report.max_entry = report.min_entry;
  for (double v : t.entries()) {
    report.min_entry = std::min(report.min_entry, v);
    report.max_entry = std::max(report.max_entry, v);
  }
  for (int c = 0; c < t.cols(); ++c) {
    report.max_column_deviation =
        std::max(report.max_column_deviation, std::abs(t.column_sum(c) - 1.0));
  }
  report.pass =
      report.max_column_deviation <= tol && report.min_entry >= -tol;
  return report;
}

TransitionMatrix compose(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (!a.input_basis().same_space(b.output_basis())) {
    throw StructuralError("compose: inner bases disagree");
  }
  TransitionMatrix c = TransitionMatrix::zero(b.input_basis(), a.output_basis());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        c.at(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

ProbVector apply(const TransitionMatrix& t, const ProbVector& p, double tol) {
  if (!t.input_basis().same_space(p.basis())) {
    throw StructuralError("apply: vector basis does not match matrix input");
  }
  std::vector<double> out(t.rows(), 0.0);
  for (int r = 0; r < t.rows(); ++r) {
    for (int c = 0; c < t.cols(); ++c) {
      out[r] += t(r, c) * p[c];
    }
  }
  return ProbVector(t.output_basis(), std::move(out), tol);
}

double max_abs_difference(const TransitionMatrix& a,
                          const TransitionMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw StructuralError("max_abs_difference: shape mismatch");
  }
  double m = 0.0;
  for (size_t i = 0; i < a.entries().size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

}  // namespace gptstat
