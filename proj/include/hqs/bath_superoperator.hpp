#pragma once

#include "hqs/engine.hpp"

namespace hqs {

// Matrix form of O -> T*_{[t0,t1]}(O) for inputs supported on a bath region,
// in the matrix-unit basis (vec index = row + dim*col). When the dual image
// leaves the input region the matrix is rebuilt over the full bath and
// flagged, never silently truncated.
struct BathSuperoperator {
  Mat matrix;  // 4^{|out|} x 4^{|in|}
  std::vector<QubitId> region_in;
  std::vector<QubitId> region_out;
  int t0{1}, t1{0};  // window [t0, t1]; t1 < t0 means length zero
  bool support_closed{true};

  int window_length() const { return t1 - t0 + 1; }
  std::size_t dim_in() const { return std::size_t(1) << region_in.size(); }
  std::size_t dim_out() const { return std::size_t(1) << region_out.size(); }
};

BathSuperoperator bath_superoperator(const PreparationPlan& plan, int t0,
                                     int t1,
                                     const std::vector<QubitId>& region);
BathSuperoperator bath_superoperator(const PreparationPlan& plan, int t0,
                                     int t1, const Ball& ball);

// Contiguous bath segment of `ell` qubits starting at column c0: the
// length-scale-ell window of the contraction.
std::vector<QubitId> bath_segment(int c0, int ell);

// Certified interval for the contraction: the sup over unit-operator-norm
// inputs of ||T*(O) - Phi T*(O)||. The lower bound scans the Pauli basis and
// runs projected gradient ascent (Hermitian and general starts); the upper
// bound is min(2, sqrt(d_in) * smax) through the Frobenius-norm chain.
struct EtaBounds {
  double lower{0.0};
  double upper{0.0};
  double lower_hermitian{0.0};
};
EtaBounds eta(const BathSuperoperator& sop, int restarts = 64, int iters = 200,
              std::uint64_t seed = 1);

// max over all length-ell segments of the bath.
EtaBounds eta_at_length_scale(const PreparationPlan& plan, int t0, int t1,
                              int ell, int restarts = 64, int iters = 200);

}  // namespace hqs
