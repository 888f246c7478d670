#pragma once

#include <complex>
#include <span>

namespace gptstat {

// Direct permutation sum, perm(A) = sum over sigma of prod_i a[i][sigma(i)].
// O(n! n); capped at n = 11. Kept separate from the production kernel so the
// two can check each other.
double reference_permanent(std::span<const double> a, int n);
std::complex<double> reference_permanent(std::span<const std::complex<double>> a,
                                         int n);

}  // namespace gptstat
