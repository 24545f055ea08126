#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hqs/qubit_id.hpp"

namespace hqs {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// An operator on an explicit, ordered qubit support. Tensor legs are
// little-endian over the support list: the first listed qubit is the
// fastest-varying index bit. Every matrix-producing routine in this header
// follows that convention.
struct DenseOperator {
  std::vector<QubitId> support;
  Mat mat;

  DenseOperator() = default;
  DenseOperator(std::vector<QubitId> s, Mat m);

  std::size_t dim() const { return std::size_t(mat.rows()); }
  int num_qubits() const { return int(support.size()); }
  int leg_of(const QubitId& q) const;  // -1 when absent
};

// A DenseOperator validated as a state: Hermitian within 1e-12, eigenvalues
// >= -1e-12 (violations raise, never clip), trace within 1e-12 of 1.
struct DensityMatrix {
  DenseOperator op;

  DensityMatrix() = default;
  DensityMatrix(std::vector<QubitId> s, Mat m);
  explicit DensityMatrix(DenseOperator o);

  const std::vector<QubitId>& support() const { return op.support; }
  const Mat& mat() const { return op.mat; }
};

Mat kron_le(const Mat& a, const Mat& b);  // little-endian: a on lower legs

Mat identity_m(int qubits);
Mat ket_matrix(const Vec& psi);  // |psi><psi|

// op tensored with identity onto target_support (op.support must be a
// subset); legs ordered per target_support.
DenseOperator embed(const DenseOperator& op,
                    const std::vector<QubitId>& target_support);

// Partial trace keeping `keep` (subset of support, result ordered as the
// subsequence of support).
DenseOperator partial_trace(const DenseOperator& op,
                            const std::vector<QubitId>& keep);

cplx trace_of(const DenseOperator& op);
// Tr[a^dagger b] with automatic support alignment (supports must match as
// sets).
cplx hs_inner(const DenseOperator& a, const DenseOperator& b);

// Largest singular value / sum of singular values.
double operator_norm(const Mat& m);
double trace_norm(const Mat& m);
double operator_norm(const DenseOperator& op);
double trace_norm(const DenseOperator& op);

// Reorder legs so that op.support becomes new_order (same set).
DenseOperator permuted(const DenseOperator& op,
                       const std::vector<QubitId>& new_order);

// a*b with support alignment: both are embedded into the union support.
DenseOperator multiply(const DenseOperator& a, const DenseOperator& b);
DenseOperator add(const DenseOperator& a, const DenseOperator& b, cplx wa = 1.0,
                  cplx wb = 1.0);

// Single-qubit basis states.
Mat ket0_dm();
Mat ket1_dm();
Mat ketplus_dm();
Mat pauli_mat(char letter);  // 'I' 'X' 'Y' 'Z'

}  // namespace hqs
