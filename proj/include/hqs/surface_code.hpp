#pragma once

#include "hqs/transition_map.hpp"

namespace hqs {

// One stabilizer generator of the rotated surface code (qubits on vertices):
// 4-body plaquettes in the bulk, 2-body X pairs on the top/bottom rows,
// 2-body Z pairs on the left/right columns. Rows are 1-based, columns
// 0-based. The anchor (r, c) is the lower-left corner of the (possibly
// truncated) plaquette, r in [0, ly], c in [-1, lx-1]; type is X iff r+c is
// odd.
struct SurfaceStabilizer {
  bool x_type{false};
  int anchor_row{0};
  int anchor_col{0};
  std::vector<std::pair<int, int>> sites;  // (row, col)
};

std::vector<SurfaceStabilizer> surface_code_generators(int lx, int ly);
PauliString stabilizer_pauli(const SurfaceStabilizer& s);

// The Pauli-Z string along a row: the logical operator that survives the
// bath map.
PauliString logical_z_row(int lx, int row);

// Stabilizers set during step t (the paper's three-contiguous-row schedule):
// the layer anchored at row t acting on system+bath, plus the lookahead
// layer anchored at row t+1 acting on bath+sink (t <= ly-2). Bottom X pairs
// ride with step 1, top X pairs with step ly-1; step ly is the bare swap.
TransitionMap surface_code_transition(int lx, int t, int ly);

// Subroutine building blocks, exposed for the FIG-level tests. Members must
// carry their lattice row in `new_row_members` to pick the correction
// target. Gates are appended one per layer.
void append_stabilizer_subroutine(CircuitBuilder& builder, bool x_type,
                                  const std::vector<QubitId>& members,
                                  const std::vector<QubitId>& new_row_members,
                                  const QubitId& ancilla,
                                  std::map<QubitId, Mat>& omega_sink,
                                  std::vector<QubitId>& sink);

// X-then-Z is the shipped order; the flag exists for the order-equivalence
// regression test.
TransitionMap surface_code_transition_order(int lx, int t, int ly,
                                            bool z_before_x);

}  // namespace hqs
