#pragma once

#include "hqs/dense_op.hpp"

namespace hqs {

// Completely positive trace-preserving map in Kraus form. Kraus matrices have
// shape 2^|codomain| x 2^|domain|; completeness (sum K^dag K = I) is checked
// at construction within 1e-12.
struct QuantumChannel {
  std::vector<Mat> kraus;
  std::vector<QubitId> domain;
  std::vector<QubitId> codomain;

  QuantumChannel() = default;
  QuantumChannel(std::vector<Mat> ks, std::vector<QubitId> dom,
                 std::vector<QubitId> cod, bool check = true);

  static QuantumChannel unitary(const Mat& u, std::vector<QubitId> qs);
  // rho -> rho (x) omega on fresh qubits.
  static QuantumChannel append_state(const DensityMatrix& omega,
                                     std::vector<QubitId> passthrough);
  // rho -> Tr_traced[rho].
  static QuantumChannel trace_out(std::vector<QubitId> full,
                                  std::vector<QubitId> traced);
  static QuantumChannel identity(std::vector<QubitId> qs);

  // T2 after T1 (T2 . T1); T1.codomain must equal T2.domain as a set.
  QuantumChannel compose_after(const QuantumChannel& first) const;
};

// Schroedinger action: returns sum_k K rho K^dag, with the channel embedded
// (identity on rho's qubits outside the domain). Domain must be contained in
// rho's support.
DensityMatrix apply_channel(const QuantumChannel& ch, const DensityMatrix& rho);
// Same action on a general operator (no state validation); used by oracles.
DenseOperator apply_channel_op(const QuantumChannel& ch,
                               const DenseOperator& x);

// Hilbert-Schmidt adjoint: Kraus adjoints, domain/codomain swapped. The dual
// is unital but generally not trace preserving, so no completeness check.
QuantumChannel dual_channel(const QuantumChannel& ch);
// Heisenberg action of a dual produced by dual_channel.
DenseOperator apply_dual(const QuantumChannel& dual, const DenseOperator& obs);

// Completely depolarizing channel Phi on the support: rho -> Tr[rho] I / 2^n.
QuantumChannel depolarizing_projector(std::vector<QubitId> support);

// Superoperator (matrix-unit basis) form, for small channels; used to compare
// channels up to Kraus gauge.
Mat superoperator_matrix(const QuantumChannel& ch);

}  // namespace hqs
