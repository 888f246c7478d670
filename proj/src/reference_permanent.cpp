#include "gptstat/reference_permanent.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "gptstat/errors.hpp"

namespace gptstat {

namespace {

template <typename T>
T permutation_sum(std::span<const T> a, int n) {
  if (n < 0 || static_cast<size_t>(n) * n != a.size()) {
    throw StructuralError("reference_permanent: expected a square matrix");
  }
  if (n > 11) {
    throw DomainError("reference_permanent: n = " + std::to_string(n) +
                      " is too large for the n! sum");
  }
  if (n == 0) return T{1};
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  T total{};
  do {
    T prod{1};
    for (int i = 0; i < n; ++i) prod *= a[static_cast<size_t>(i) * n + sigma[i]];
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace

double reference_permanent(std::span<const double> a, int n) {
  return permutation_sum(a, n);
}

std::complex<double> reference_permanent(
    std::span<const std::complex<double>> a, int n) {
  return permutation_sum(a, n);
}

}  // namespace gptstat
