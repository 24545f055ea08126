#pragma once

#include "hqs/plan.hpp"
#include "hqs/register_state.hpp"

namespace hqs {

// Schroedinger step: evolve the live register through one transition map.
// System and sink qubits are materialized lazily from their omega states;
// ancillas are traced out right after their last gate, which keeps the live
// register within bath + one row + one subroutine.
void apply_transition(DenseRegister& reg, const TransitionMap& tm);

// T_{[1,upto_t]}(rho^B) with every emitted row traced out; upto_t = 0
// returns the initial bath state.
DensityMatrix evolve_bath(const PreparationPlan& plan, int upto_t);

// Tr[rho O] via the windowed evaluation: evolve the bath to t0, then run
// transitions over the observable rows, folding each row's factor into the
// register as soon as the row is emitted. Real within 1e-10 for Hermitian
// observables (asserted).
double expectation_local(const PreparationPlan& plan,
                         const LocalObservable& obs);

// Heisenberg step: T_B^{BS_t *}(op) restricted to its true support. Legs on
// rows other than tm's system pass through untouched.
DenseOperator heisenberg_pullback(const DenseOperator& op,
                                  const TransitionMap& tm);

// |Tr[rho O] - Tr[rho~ O~]| with the noisy pipeline built from the same
// circuits and O~ the noisy Pauli.
double deviation(const PreparationPlan& plan, const LocalObservable& obs,
                 const NoiseSpec& spec);

// Dense channel forms extracted through the executor via the Choi matrix
// (small registers only).
QuantumChannel transition_channel(const TransitionMap& tm);  // B -> B u S_t
QuantumChannel bath_channel(const TransitionMap& tm);        // B -> B

// Numerical support: qubits on which op acts nontrivially, decided by
// commutators against single-qubit X and Z within tol.
std::set<QubitId> numerical_support(const DenseOperator& op,
                                    double tol = 1e-10);

}  // namespace hqs
