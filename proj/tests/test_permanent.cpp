#include <doctest.h>

#include <complex>
#include <random>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gptstat/errors.hpp"
#include "gptstat/permanent.hpp"
#include "gptstat/reference_permanent.hpp"

using namespace gptstat;
using Cplx = std::complex<double>;

namespace {

double exact_factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

template <typename T>
std::vector<T> random_square(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<T> a(static_cast<size_t>(n) * n);
  for (auto& v : a) {
    if constexpr (std::is_same_v<T, Cplx>) {
      v = Cplx{gauss(rng), gauss(rng)};
    } else {
      v = gauss(rng);
    }
  }
  return a;
}

}  // namespace

TEST_CASE("tiny orders are handled directly") {
  CHECK(permanent_serial<double>({}, 0) == 1.0);
  const std::vector<double> one = {3.5};
  CHECK(permanent_serial<double>(one, 1) == 3.5);
  const std::vector<double> m = {1.0, 2.0, 3.0, 4.0};
  CHECK(permanent_serial<double>(m, 2) == 10.0);
}

TEST_CASE("identity and zero rows behave like the definition says") {
  for (int n : {2, 3, 5, 8}) {
    std::vector<double> id(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) id[static_cast<size_t>(i) * n + i] = 1.0;
    CHECK(permanent_serial<double>(id, n) == 1.0);

    std::vector<double> zero_row(static_cast<size_t>(n) * n, 1.0);
    for (int j = 0; j < n; ++j) zero_row[j] = 0.0;
    CHECK(permanent_serial<double>(zero_row, n) == 0.0);
  }
}

TEST_CASE("all-ones permanents are exact factorials") {
  for (int n = 1; n <= 10; ++n) {
    const std::vector<double> ones(static_cast<size_t>(n) * n, 1.0);
    CHECK(permanent<double>(ones, n) == exact_factorial(n));
  }
}

TEST_CASE("gray-code kernel agrees with the permutation sum") {
  std::mt19937_64 rng(40499);
  for (int n = 2; n <= 7; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const std::vector<Cplx> a = random_square<Cplx>(n, rng);
      const Cplx fast = permanent_serial<Cplx>(a, n);
      const Cplx ref = reference_permanent(std::span<const Cplx>(a), n);
      CHECK(std::abs(fast - ref) <= 1e-12 * std::abs(ref));
    }
    const std::vector<double> b = random_square<double>(n, rng);
    const double fast = permanent_serial<double>(b, n);
    const double ref = reference_permanent(std::span<const double>(b), n);
    CHECK(std::abs(fast - ref) <= 1e-12 * std::abs(ref));
  }
}

TEST_CASE("chunked kernel tracks the serial walk") {
  // The chunked sum regroups the same terms, so it is not bitwise equal to
  // the single serial accumulation, but it must stay within rounding of it.
  std::mt19937_64 rng(77001);
  for (int n : {11, 14, 16}) {
    const std::vector<Cplx> a = random_square<Cplx>(n, rng);
    const Cplx serial = permanent_serial<Cplx>(a, n);
    const Cplx parallel = permanent_parallel<Cplx>(a, n);
    CHECK(std::abs(serial - parallel) <= 1e-12 * std::abs(serial));
  }
  // Below the chunking threshold the parallel entry point is the serial walk.
  const std::vector<double> small = random_square<double>(6, rng);
  CHECK(permanent_parallel<double>(small, 6) ==
        permanent_serial<double>(small, 6));
}

#ifdef _OPENMP
TEST_CASE("chunked result is bitwise independent of the thread count") {
  std::mt19937_64 rng(90210);
  const int n = 14;
  const std::vector<Cplx> a = random_square<Cplx>(n, rng);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const Cplx single = permanent_parallel<Cplx>(a, n);
  omp_set_num_threads(3);
  const Cplx team = permanent_parallel<Cplx>(a, n);
  omp_set_num_threads(saved);
  CHECK(single.real() == team.real());
  CHECK(single.imag() == team.imag());
}
#endif

TEST_CASE("conjugating the matrix conjugates the permanent") {
  std::mt19937_64 rng(5);
  const int n = 6;
  std::vector<Cplx> a = random_square<Cplx>(n, rng);
  const Cplx p = permanent_serial<Cplx>(a, n);
  for (auto& v : a) v = std::conj(v);
  const Cplx q = permanent_serial<Cplx>(a, n);
  CHECK(p.real() == q.real());
  CHECK(p.imag() == -q.imag());
}

TEST_CASE("shape errors are rejected") {
  const std::vector<double> bad = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS(permanent_serial<double>(bad, 2), StructuralError);
  CHECK_THROWS_AS(reference_permanent(std::span<const double>(bad), 2),
                  StructuralError);
  const std::vector<double> big(12 * 12, 1.0);
  CHECK_THROWS_AS(reference_permanent(std::span<const double>(big), 12),
                  DomainError);
}
