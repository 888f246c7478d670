#include "gptstat/removal.hpp"

#include <string>

namespace gptstat {

TransitionMatrix removal_matrix(int particles, int modes) {
  if (particles < 2) {
    throw DomainError("removal_matrix: need at least 2 particles, got " +
                      std::to_string(particles));
  }
  ModeBasis in = enumerate_basis(particles, modes);
  ModeBasis out = enumerate_basis(particles - 1, modes);
  TransitionMatrix r = TransitionMatrix::zero(in, out);
  for (int j = 0; j < in.size(); ++j) {
    OccupationState reduced = in.state(j);
    for (int k = 0; k < modes; ++k) {
      const int nk = reduced.counts[k];
      if (nk == 0) continue;
      reduced.counts[k] = nk - 1;
      r.at(out.index_of(reduced), j) +=
          static_cast<double>(nk) / static_cast<double>(particles);
      reduced.counts[k] = nk;
    }
  }
  return r;
}

TransitionMatrix removal_chain(int particles_from, int particles_to,
                               int modes) {
  if (particles_to < 1 || particles_to >= particles_from) {
    throw DomainError("removal_chain: need 1 <= K < N, got N=" +
                      std::to_string(particles_from) + " K=" +
                      std::to_string(particles_to));
  }
  TransitionMatrix chain = removal_matrix(particles_from, modes);
  for (int n = particles_from - 1; n > particles_to; --n) {
    chain = compose(removal_matrix(n, modes), chain);
  }
  return chain;
}

}  // namespace gptstat
