#pragma once

// Particle-removal maps: the stochastic matrix taking an N-particle
// distribution to the (N-1)-particle distribution obtained by deleting one
// particle uniformly at random, and chains of such removals.

#include "gptstat/basis.hpp"

namespace gptstat {

// R^(N): basis(N, M) -> basis(N-1, M). Column j puts weight n_k / N on the
// state reached by decrementing mode k of input state j. Columns sum to 1.
TransitionMatrix removal_matrix(int particles, int modes);

// R^(N -> K) = R^(K+1) ... R^(N-1) R^(N), for 1 <= K < N.
TransitionMatrix removal_chain(int particles_from, int particles_to, int modes);

}  // namespace gptstat
