#pragma once

#include "hqs/stab_verify.hpp"

namespace hqs {

struct MonteCarloResult {
  double mean{0.0};
  double stderr_of_mean{0.0};
  std::size_t shots{0};
};

// Trajectory sampling of the Pauli-fault model: after every gate a uniform
// two-qubit Pauli fires with probability gate_p, and every prepared state is
// mixed with I/2 with weight state_q. Each shot draws from its own
// (seed, shot-index) stream, so results are independent of scheduling.
MonteCarloResult monte_carlo_pauli_noise(
    const std::vector<ParsedTransition>& blocks, int lx, int ly, double gate_p,
    double state_q, const PauliString& observable, std::size_t shots,
    std::uint64_t seed, int jobs = 2);

}  // namespace hqs
