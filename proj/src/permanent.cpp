#include "gptstat/permanent.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "gptstat/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gptstat {

namespace {

// Nijenhuis-Wilf: with x_i(S) = a[i][n-1] - (sum_j a[i][j])/2 + sum_{k in S}
// a[i][k] over subsets S of the first n-1 columns,
//   perm(A) = 2 * (-1)^(n-1) * sum_S (-1)^|S| prod_i x_i(S).
// Subsets are visited in Gray-code order, g = 1 .. 2^(n-1)-1 with
// S_g = g ^ (g >> 1); one column add/subtract updates x per step, and
// popcount parity of S_g equals the parity of g.

// Signed sum of the subset terms for g in [g_lo, g_hi). `cols` is the matrix
// in column-major order, `base` is x(empty set). n >= 2.
template <typename T>
T term_range_sum(const std::vector<T>& cols, const std::vector<T>& base,
                 int n, std::uint64_t g_lo, std::uint64_t g_hi) {
  std::vector<T> x = base;
  std::uint64_t gray = (g_lo - 1) ^ ((g_lo - 1) >> 1);
  for (int k = 0; k < n - 1; ++k) {
    if ((gray >> k) & 1u) {
      const T* col = cols.data() + static_cast<size_t>(k) * n;
      for (int i = 0; i < n; ++i) x[i] += col[i];
    }
  }
  T sum{};
  for (std::uint64_t g = g_lo; g < g_hi; ++g) {
    const int k = std::countr_zero(g);
    gray ^= std::uint64_t{1} << k;
    const T* col = cols.data() + static_cast<size_t>(k) * n;
    if ((gray >> k) & 1u) {
      for (int i = 0; i < n; ++i) x[i] += col[i];
    } else {
      for (int i = 0; i < n; ++i) x[i] -= col[i];
    }
    // Two accumulators to shorten the multiply dependency chain.
    T p0 = x[0];
    T p1 = x[1];
    int i = 2;
    for (; i + 1 < n; i += 2) {
      p0 *= x[i];
      p1 *= x[i + 1];
    }
    if (i < n) p0 *= x[i];
    const T prod = p0 * p1;
    if (g & 1u) {
      sum -= prod;
    } else {
      sum += prod;
    }
  }
  return sum;
}

template <typename T>
struct WalkSetup {
  std::vector<T> cols;  // column-major copy
  std::vector<T> base;  // x(empty set)
  T empty_term;         // prod_i base_i
};

template <typename T>
WalkSetup<T> prepare_walk(std::span<const T> a, int n) {
  WalkSetup<T> w;
  w.cols.resize(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      w.cols[static_cast<size_t>(k) * n + i] = a[static_cast<size_t>(i) * n + k];
    }
  }
  w.base.resize(n);
  w.empty_term = T{1};
  const T half{0.5};
  for (int i = 0; i < n; ++i) {
    T row_sum{};
    for (int j = 0; j < n; ++j) row_sum += a[static_cast<size_t>(i) * n + j];
    w.base[i] = a[static_cast<size_t>(i) * n + (n - 1)] - half * row_sum;
    w.empty_term *= w.base[i];
  }
  return w;
}

template <typename T>
void check_order(std::span<const T> a, int n) {
  if (n < 0 || static_cast<size_t>(n) * n != a.size()) {
    throw StructuralError("permanent: expected a square matrix, got " +
                          std::to_string(a.size()) + " entries for order " +
                          std::to_string(n));
  }
  if (n > 62) {
    throw DomainError("permanent: order " + std::to_string(n) +
                      " exceeds the subset-index width");
  }
}

template <typename T>
T scale_result(int n, T subset_sum) {
  const T two{2};
  return (n % 2 == 1) ? two * subset_sum : -two * subset_sum;
}

}  // namespace

template <typename T>
T permanent_serial(std::span<const T> a, int n) {
  check_order(a, n);
  if (n == 0) return T{1};
  if (n == 1) return a[0];
  const WalkSetup<T> w = prepare_walk(a, n);
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  const T sum = w.empty_term + term_range_sum(w.cols, w.base, n, 1, total);
  return scale_result(n, sum);
}

template <typename T>
T permanent_parallel(std::span<const T> a, int n) {
  check_order(a, n);
  if (n == 0) return T{1};
  if (n == 1) return a[0];
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  // The chunk grid is fixed by n alone so the chunk partial sums, and hence
  // the in-order reduction below, do not depend on the thread count.
  if (n - 1 < 10) return permanent_serial(a, n);
  const int chunks = 256;
  const std::uint64_t step = total / chunks;
  const WalkSetup<T> w = prepare_walk(a, n);
  std::vector<T> partial(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int c = 0; c < chunks; ++c) {
    const std::uint64_t lo = (c == 0) ? 1 : static_cast<std::uint64_t>(c) * step;
    const std::uint64_t hi = static_cast<std::uint64_t>(c + 1) * step;
    partial[c] = term_range_sum(w.cols, w.base, n, lo, hi);
  }
  T sum = w.empty_term;
  for (const T& p : partial) sum += p;
  return scale_result(n, sum);
}

template <typename T>
T permanent(std::span<const T> a, int n) {
  if (n >= kPermanentParallelMinOrder) return permanent_parallel(a, n);
  return permanent_serial(a, n);
}

template double permanent_serial<double>(std::span<const double>, int);
template double permanent_parallel<double>(std::span<const double>, int);
template double permanent<double>(std::span<const double>, int);
template std::complex<double> permanent_serial<std::complex<double>>(
    std::span<const std::complex<double>>, int);
template std::complex<double> permanent_parallel<std::complex<double>>(
    std::span<const std::complex<double>>, int);
template std::complex<double> permanent<std::complex<double>>(
    std::span<const std::complex<double>>, int);

}  // namespace gptstat
