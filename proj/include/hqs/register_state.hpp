#pragma once

#include <map>

#include "hqs/dense_op.hpp"

namespace hqs {

// Raised when an evaluation would exceed the dense qubit ceiling.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int dense_qubit_ceiling();  // HQS_DENSE_QUBIT_CEILING, default 13

// Growable dense workspace over an ordered set of live qubits. In density
// mode qubit j owns index bits (2j, 2j+1) = (ket, bra); in pure mode it owns
// bit j. Adding a qubit appends legs; tracing one contracts its leg pair.
// The same container evolves states (Schroedinger) and observables
// (Heisenberg): O -> U^dag O U is apply_pair with U^dag.
class DenseRegister {
 public:
  static DenseRegister density(int ceiling = dense_qubit_ceiling());
  static DenseRegister pure(int ceiling = dense_qubit_ceiling());

  bool is_density() const { return density_; }
  int num_qubits() const { return int(qubits_.size()); }
  const std::vector<QubitId>& qubits() const { return qubits_; }
  bool has(const QubitId& q) const { return index_of(q) >= 0; }

  // Density mode: append qubit in state/block `m` (2x2). Pure mode: use the
  // ket overload.
  void add_qubit(const QubitId& q, const Mat& m);
  void add_qubit_ket(const QubitId& q, const Vec& psi);

  // Apply m on the ket legs and conj(m) on the bra legs (density mode), or
  // just m (pure mode). Works for non-unitary m.
  void apply_pair1(const QubitId& q, const Mat& m);
  void apply_pair2(const QubitId& a, const QubitId& b, const Mat& m);

  // Density mode only: rho -> sum_k K rho K^dag over the listed qubits.
  void apply_kraus1(const QubitId& q, const std::vector<Mat>& ks);
  void apply_kraus2(const QubitId& a, const QubitId& b,
                    const std::vector<Mat>& ks);

  // Density mode: rho -> (1-p) rho + p * Tr_pair[rho] (x) I/4 on (a, b).
  void depolarize_pair(const QubitId& a, const QubitId& b, double p);
  // rho -> (1-p) rho + p P rho P^dag for a two-qubit unitary P.
  void mix_with_conjugated(const QubitId& a, const QubitId& b, const Mat& p_mat,
                           double p);

  // Density mode: remove qubit by partial trace.
  void trace_out(const QubitId& q);
  // Density mode: contract qubit against M, i.e. keep Tr_q[M rho_q-block].
  // fold(q, I) == trace_out(q).
  void fold(const QubitId& q, const Mat& m);
  // Pure mode: drop an unentangled qubit (purity of its reduced state is
  // verified within tol; throws otherwise).
  void drop_product_qubit(const QubitId& q, double tol = 1e-9);

  cplx trace() const;                       // density mode
  double norm2() const;                     // pure mode <psi|psi>
  cplx expect_pauli(const std::map<QubitId, char>& letters) const;

  // Extraction (small registers; used by oracles and module boundaries).
  DenseOperator to_operator() const;
  void load_operator(const DenseOperator& op);

  std::size_t size() const { return data_.size(); }

 private:
  explicit DenseRegister(bool density, int ceiling)
      : density_(density), ceiling_(ceiling) {}
  int index_of(const QubitId& q) const;
  int require(const QubitId& q) const;
  void check_ceiling(int extra) const;
  // Density mode: multiply m onto the ket leg only (left multiplication).
  void apply_ket_only(int qubit_index, const Mat& m);

  bool density_{true};
  int ceiling_{13};
  std::vector<QubitId> qubits_;
  std::vector<cplx> data_{cplx(1.0, 0.0)};
};

}  // namespace hqs
