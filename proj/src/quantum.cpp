#include "gptstat/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "gptstat/errors.hpp"
#include "gptstat/permanent.hpp"

namespace gptstat {

namespace {

// Exact up to 20!; 21! overflows 64 bits.
constexpr int kMaxFactorial = 20;

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t occupation_factorial_product(const OccupationState& s) {
  std::uint64_t p = 1;
  for (int c : s.counts) p *= factorial_u64(c);
  return p;
}

// Row/column indices of U repeated by occupation counts.
std::vector<int> expand_occupation(const OccupationState& s) {
  std::vector<int> idx;
  idx.reserve(s.total());
  for (int mode = 0; mode < s.modes(); ++mode) {
    for (int r = 0; r < s.counts[mode]; ++r) idx.push_back(mode);
  }
  return idx;
}

}  // namespace

ComplexMatrix::ComplexMatrix(int order,
                             std::vector<std::complex<double>> row_major)
    : order_(order), entries_(std::move(row_major)) {
  if (order_ < 1 ||
      entries_.size() != static_cast<size_t>(order_) * order_) {
    throw StructuralError("ComplexMatrix: expected " +
                          std::to_string(order_) + "x" +
                          std::to_string(order_) + " entries, got " +
                          std::to_string(entries_.size()));
  }
}

ComplexMatrix ComplexMatrix::zero(int order) {
  return ComplexMatrix(
      order, std::vector<std::complex<double>>(
                 static_cast<size_t>(order) * order, {0.0, 0.0}));
}

ComplexMatrix ComplexMatrix::identity(int order) {
  ComplexMatrix m = zero(order);
  for (int i = 0; i < order; ++i) m.at(i, i) = {1.0, 0.0};
  return m;
}

double ComplexMatrix::unitarity_deviation() const {
  const int n = order_;
  double dev = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::complex<double> dot{0.0, 0.0};
      for (int k = 0; k < n; ++k) {
        dot += (*this)(i, k) * std::conj((*this)(j, k));
      }
      if (i == j) dot -= 1.0;
      dev = std::max(dev, std::abs(dot));
    }
  }
  return dev;
}

ModeUnitary::ModeUnitary(ComplexMatrix u, double tol) : matrix_(std::move(u)) {
  const double dev = matrix_.unitarity_deviation();
  if (!(dev <= tol)) {
    throw DomainError("ModeUnitary: U.U^dagger deviates from identity by " +
                      std::to_string(dev));
  }
}

ModeUnitary bs_unitary(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return ModeUnitary(ComplexMatrix(
      2, {{c, 0.0}, {s, 0.0}, {-s, 0.0}, {c, 0.0}}));
}

ModeUnitary realize(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw DomainError("realize: beta = " + std::to_string(beta) +
                      " outside [0, 1]");
  }
  return bs_unitary(std::acos(std::sqrt(beta)));
}

std::complex<double> permanent(const ComplexMatrix& m) {
  return permanent<std::complex<double>>(
      std::span<const std::complex<double>>(m.entries()), m.order());
}

TransitionMatrix boson_transition_matrix(const ModeUnitary& u, int particles) {
  if (particles < 1) {
    throw DomainError("boson_transition_matrix: need at least one particle");
  }
  if (particles > kMaxFactorial) {
    throw DomainError(
        "boson_transition_matrix: factorial normalization is exact only up "
        "to 20 particles, got " +
        std::to_string(particles));
  }
  const ModeBasis basis = enumerate_basis(particles, u.modes());
  const int dim = basis.size();
  TransitionMatrix t = TransitionMatrix::zero(basis, basis);

  std::vector<std::vector<int>> expanded(dim);
  std::vector<double> norm(dim);
  for (int i = 0; i < dim; ++i) {
    expanded[i] = expand_occupation(basis.state(i));
    norm[i] = static_cast<double>(occupation_factorial_product(basis.state(i)));
  }

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int col = 0; col < dim; ++col) {
    std::vector<std::complex<double>> sub(
        static_cast<size_t>(particles) * particles);
    for (int row = 0; row < dim; ++row) {
      const std::vector<int>& rows = expanded[row];
      const std::vector<int>& cols = expanded[col];
      for (int i = 0; i < particles; ++i) {
        for (int j = 0; j < particles; ++j) {
          sub[static_cast<size_t>(i) * particles + j] = u(rows[i], cols[j]);
        }
      }
      const std::complex<double> amp = permanent_serial<std::complex<double>>(
          std::span<const std::complex<double>>(sub), particles);
      t.at(row, col) = std::norm(amp) / (norm[row] * norm[col]);
    }
  }
  return t;
}

ModeUnitary random_unitary(int modes, std::mt19937_64& rng) {
  if (modes < 1) {
    throw DomainError("random_unitary: need at least one mode");
  }
  const int n = modes;
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<std::complex<double>>> q(n);
  for (int j = 0; j < n; ++j) {
    std::vector<std::complex<double>> v(n);
    for (int i = 0; i < n; ++i) v[i] = {gauss(rng), gauss(rng)};
    // Two Gram-Schmidt passes keep the columns orthogonal to roundoff.
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        std::complex<double> dot{0.0, 0.0};
        for (int i = 0; i < n; ++i) dot += std::conj(q[k][i]) * v[i];
        for (int i = 0; i < n; ++i) v[i] -= dot * q[k][i];
      }
    }
    double nrm2 = 0.0;
    for (int i = 0; i < n; ++i) nrm2 += std::norm(v[i]);
    const double nrm = std::sqrt(nrm2);
    if (nrm < 1e-12) {
      throw StructuralError("random_unitary: degenerate Gaussian draw");
    }
    for (int i = 0; i < n; ++i) v[i] /= nrm;
    q[j] = std::move(v);
  }
  ComplexMatrix m = ComplexMatrix::zero(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m.at(i, j) = q[j][i];
  }
  return ModeUnitary(std::move(m));
}

}  // namespace gptstat
