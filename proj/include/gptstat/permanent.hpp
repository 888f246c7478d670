#pragma once

// Matrix permanents by Ryser's inclusion-exclusion formula in the
// Nijenhuis-Wilf half-range form, iterating subsets in Gray-code order so
// each step updates the running row sums with a single column add or
// subtract: O(2^n * n) total work instead of O(n! * n).
//
// Two kernels share the same term enumeration. The serial one walks the
// whole subset range; the parallel one splits the range into a fixed number
// of chunks (independent of the thread count), reduces each chunk on its
// own, and sums the chunk results in index order, so the value it returns
// is bit-for-bit reproducible no matter how many OpenMP threads run it.
// permanent() dispatches between them on matrix size.

#include <complex>
#include <span>

namespace gptstat {

// Entries in row-major order; a has n*n elements. n = 0 yields 1.
template <typename T>
T permanent_serial(std::span<const T> a, int n);

template <typename T>
T permanent_parallel(std::span<const T> a, int n);

template <typename T>
T permanent(std::span<const T> a, int n);

// Matrices below this order are not worth forking threads for; used by the
// permanent() dispatch.
inline constexpr int kPermanentParallelMinOrder = 15;

}  // namespace gptstat
