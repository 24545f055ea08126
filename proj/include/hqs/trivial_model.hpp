#pragma once

#include "hqs/transition_map.hpp"

namespace hqs {

// Product-state circuit family: the bath is swapped out to the system row,
// then single-qubit rotations prepare the next row's product state on the
// bath. The induced bath map discards its input.
TransitionMap trivial_state_transition(int lx, int t,
                                       const std::vector<Vec>& target_row_kets);

// All-|0> plan transition.
TransitionMap trivial_zero_transition(int lx, int t);

// Negative control for the mixing condition: no swap, just a nontrivial
// unitary (a Hadamard wall) on the bath. The bath map is unitary, so it
// cannot mix.
TransitionMap trivial_no_swap_transition(int lx, int t);

// 2x2 unitary with u|0> = psi.
Mat completion_unitary(const Vec& psi);

}  // namespace hqs
