#pragma once

#include <complex>
#include <random>
#include <span>
#include <vector>

#include "gptstat/basis.hpp"

namespace gptstat {

// Square complex matrix in row-major order.
class ComplexMatrix {
 public:
  ComplexMatrix(int order, std::vector<std::complex<double>> row_major);
  static ComplexMatrix zero(int order);
  static ComplexMatrix identity(int order);

  int order() const { return order_; }
  std::complex<double> operator()(int row, int col) const {
    return entries_[static_cast<size_t>(row) * order_ + col];
  }
  std::complex<double>& at(int row, int col) {
    return entries_[static_cast<size_t>(row) * order_ + col];
  }
  const std::vector<std::complex<double>>& entries() const { return entries_; }

  // max_ij |(this . this^dagger - I)_ij|
  double unitarity_deviation() const;

 private:
  int order_;
  std::vector<std::complex<double>> entries_;
};

// Mode unitary validated against U U^dagger = I at construction.
class ModeUnitary {
 public:
  explicit ModeUnitary(ComplexMatrix u, double tol = kDefaultTol);

  int modes() const { return matrix_.order(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::complex<double> operator()(int row, int col) const {
    return matrix_(row, col);
  }

 private:
  ComplexMatrix matrix_;
};

// [[cos t, sin t], [-sin t, cos t]]
ModeUnitary bs_unitary(double theta);

// Two-mode unitary whose two-particle statistics reproduce the one-parameter
// doubly stochastic family at parameter beta. This module fixes beta = cos^2
// theta (the mode-1 stay probability |u_11|^2), so the representative
// returned is bs_unitary(acos(sqrt(beta))) with theta in [0, pi/2].
ModeUnitary realize(double beta);

// perm of the order-n matrix held in m.
std::complex<double> permanent(const ComplexMatrix& m);

// N-particle transition matrix of a mode unitary under bosonic statistics:
//   P(t | s) = |perm(U[t|s])|^2 / (prod_k s_k! * prod_l t_l!)
// where U[t|s] repeats column k of U s_k times and row l t_l times.
// Requires 1 <= particles <= 20 (factorials stay exact in 64-bit).
TransitionMatrix boson_transition_matrix(const ModeUnitary& u, int particles);

// Haar-distributed unitary from Gram-Schmidt on a Gaussian matrix.
ModeUnitary random_unitary(int modes, std::mt19937_64& rng);

}  // namespace gptstat
