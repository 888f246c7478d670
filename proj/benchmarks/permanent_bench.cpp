#include <chrono>
#include <complex>
#include <cstdio>
#include <random>
#include <span>
#include <vector>

#include "gptstat/permanent.hpp"
#include "gptstat/reference_permanent.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using gptstat::permanent_parallel;
using gptstat::permanent_serial;
using gptstat::reference_permanent;
using Cplx = std::complex<double>;

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::vector<Cplx> random_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Cplx> a(static_cast<size_t>(n) * n);
  for (auto& v : a) v = {gauss(rng), gauss(rng)};
  return a;
}

}  // namespace

int main() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("permanent kernels, %d thread(s)\n", threads);
  std::printf("%4s %14s %14s %9s %12s\n", "n", "serial (ms)", "parallel (ms)",
              "speedup", "rel diff");

  std::mt19937_64 rng(0xb5297a4d2f6e1abcull);
  bool agree = true;
  for (int n : {8, 10, 12, 16, 20, 22, 24}) {
    const std::vector<Cplx> a = random_matrix(n, rng);
    const std::span<const Cplx> span(a);

    double t0 = now_seconds();
    const Cplx serial = permanent_serial(span, n);
    const double serial_ms = (now_seconds() - t0) * 1e3;

    t0 = now_seconds();
    const Cplx parallel = permanent_parallel(span, n);
    const double parallel_ms = (now_seconds() - t0) * 1e3;

    const double rel_diff = std::abs(serial - parallel) / std::abs(serial);
    std::printf("%4d %14.3f %14.3f %9.2f %12.3g\n", n, serial_ms, parallel_ms,
                serial_ms / parallel_ms, rel_diff);
    agree = agree && rel_diff <= 1e-9;

    if (n <= 10) {
      const Cplx ref = reference_permanent(span, n);
      const double rel = std::abs(serial - ref) / std::abs(ref);
      std::printf("     permutation-sum cross-check: rel err %.3g\n", rel);
      agree = agree && rel < 1e-12;
    }
  }

#ifdef _OPENMP
  // The chunked reduction must give bit-identical results for any team size.
  {
    const int n = 18;
    const std::vector<Cplx> a = random_matrix(n, rng);
    const Cplx wide = permanent_parallel(std::span<const Cplx>(a), n);
    omp_set_num_threads(1);
    const Cplx narrow = permanent_parallel(std::span<const Cplx>(a), n);
    omp_set_num_threads(threads);
    const bool identical =
        wide.real() == narrow.real() && wide.imag() == narrow.imag();
    std::printf("thread-count invariance at n=%d: %s\n", n,
                identical ? "bit-identical" : "MISMATCH");
    agree = agree && identical;
  }
#endif

  if (!agree) {
    std::printf("kernel disagreement detected\n");
    return 1;
  }
  return 0;
}
