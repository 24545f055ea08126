#include "hqs/dense_op.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <set>
#include <sstream>

namespace hqs {

std::string to_string(const QubitId& q) {
  static const char* tag[] = {"b", "s", "k", "a"};
  std::ostringstream os;
  os << tag[int(q.reg)] << ":" << q.row << ":" << q.col;
  return os.str();
}

QubitId parse_qubit(const std::string& text) {
  auto p1 = text.find(':');
  auto p2 = text.find(':', p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos)
    throw std::invalid_argument("bad qubit name: " + text);
  const std::string tag = text.substr(0, p1);
  Reg reg;
  if (tag == "b") reg = Reg::Bath;
  else if (tag == "s") reg = Reg::System;
  else if (tag == "k") reg = Reg::Sink;
  else if (tag == "a") reg = Reg::Ancilla;
  else throw std::invalid_argument("bad qubit register: " + text);
  int row = std::stoi(text.substr(p1 + 1, p2 - p1 - 1));
  int col = std::stoi(text.substr(p2 + 1));
  return {reg, std::int16_t(row), std::int16_t(col)};
}

std::vector<QubitId> bath_row(int lx) {
  std::vector<QubitId> out;
  for (int c = 0; c < lx; ++c) out.push_back(QubitId::bath(c));
  return out;
}
std::vector<QubitId> system_row(int t, int lx) {
  std::vector<QubitId> out;
  for (int c = 0; c < lx; ++c) out.push_back(QubitId::system(t, c));
  return out;
}
std::vector<QubitId> sink_row(int t, int lx) {
  std::vector<QubitId> out;
  for (int c = 0; c < lx; ++c) out.push_back(QubitId::sink(t, c));
  return out;
}

DenseOperator::DenseOperator(std::vector<QubitId> s, Mat m)
    : support(std::move(s)), mat(std::move(m)) {
  const std::size_t d = std::size_t(1) << support.size();
  if (std::size_t(mat.rows()) != d || std::size_t(mat.cols()) != d)
    throw std::invalid_argument("operator dimension does not match support");
  std::set<QubitId> uniq(support.begin(), support.end());
  if (uniq.size() != support.size())
    throw std::invalid_argument("duplicate qubit in support");
}

int DenseOperator::leg_of(const QubitId& q) const {
  for (std::size_t i = 0; i < support.size(); ++i)
    if (support[i] == q) return int(i);
  return -1;
}

DensityMatrix::DensityMatrix(std::vector<QubitId> s, Mat m)
    : DensityMatrix(DenseOperator(std::move(s), std::move(m))) {}

DensityMatrix::DensityMatrix(DenseOperator o) : op(std::move(o)) {
  const double herm = (op.mat - op.mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12)
    throw std::invalid_argument("density matrix not Hermitian");
  const cplx tr = op.mat.trace();
  if (std::abs(tr - cplx(1.0)) > 1e-12)
    throw std::invalid_argument("density matrix trace != 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(op.mat, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-12)
    throw std::invalid_argument("density matrix has negative eigenvalue");
}

Mat kron_le(const Mat& a, const Mat& b) {
  // Little-endian: a occupies the low legs, so the composite index is
  // i = ia + dim(a)*ib, which is kron(b, a) in the usual row-major sense.
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index ib = 0; ib < b.rows(); ++ib)
    for (Eigen::Index jb = 0; jb < b.cols(); ++jb)
      out.block(ib * a.rows(), jb * a.cols(), a.rows(), a.cols()) =
          b(ib, jb) * a;
  return out;
}

Mat identity_m(int qubits) {
  const Eigen::Index d = Eigen::Index(1) << qubits;
  return Mat::Identity(d, d);
}

Mat ket_matrix(const Vec& psi) { return psi * psi.adjoint(); }

DenseOperator embed(const DenseOperator& op,
                    const std::vector<QubitId>& target_support) {
  std::vector<int> pos(op.support.size());
  for (std::size_t i = 0; i < op.support.size(); ++i) {
    auto it = std::find(target_support.begin(), target_support.end(),
                        op.support[i]);
    if (it == target_support.end())
      throw std::invalid_argument("embed: support mismatch");
    pos[i] = int(it - target_support.begin());
  }
  const int nt = int(target_support.size());
  const std::size_t dt = std::size_t(1) << nt;
  Mat out = Mat::Zero(dt, dt);
  const std::size_t ds = op.dim();
  // For each target index pair, the op factor acts on the mapped bits and
  // identity on the rest.
  std::size_t op_mask = 0;
  for (int p : pos) op_mask |= std::size_t(1) << p;
  for (std::size_t I = 0; I < dt; ++I) {
    std::size_t i_op = 0;
    for (std::size_t b = 0; b < pos.size(); ++b)
      if (I & (std::size_t(1) << pos[b])) i_op |= std::size_t(1) << b;
    const std::size_t rest = I & ~op_mask;
    for (std::size_t j_op = 0; j_op < ds; ++j_op) {
      std::size_t J = rest;
      for (std::size_t b = 0; b < pos.size(); ++b)
        if (j_op & (std::size_t(1) << b)) J |= std::size_t(1) << pos[b];
      out(I, J) = op.mat(i_op, j_op);
    }
  }
  return DenseOperator(target_support, std::move(out));
}

DenseOperator partial_trace(const DenseOperator& op,
                            const std::vector<QubitId>& keep) {
  std::vector<int> keep_legs;
  for (const auto& q : keep) {
    int l = op.leg_of(q);
    if (l < 0) throw std::invalid_argument("partial_trace: keep not subset");
    keep_legs.push_back(l);
  }
  std::vector<int> drop_legs;
  for (int l = 0; l < op.num_qubits(); ++l)
    if (std::find(keep_legs.begin(), keep_legs.end(), l) == keep_legs.end())
      drop_legs.push_back(l);
  const std::size_t dk = std::size_t(1) << keep_legs.size();
  const std::size_t dd = std::size_t(1) << drop_legs.size();
  Mat out = Mat::Zero(dk, dk);
  auto compose = [&](std::size_t ik, std::size_t id) {
    std::size_t full = 0;
    for (std::size_t b = 0; b < keep_legs.size(); ++b)
      if (ik & (std::size_t(1) << b)) full |= std::size_t(1) << keep_legs[b];
    for (std::size_t b = 0; b < drop_legs.size(); ++b)
      if (id & (std::size_t(1) << b)) full |= std::size_t(1) << drop_legs[b];
    return full;
  };
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j) {
      cplx acc = 0.0;
      for (std::size_t s = 0; s < dd; ++s)
        acc += op.mat(compose(i, s), compose(j, s));
      out(i, j) = acc;
    }
  // Result support ordered as the subsequence of the original support.
  std::vector<std::pair<int, QubitId>> ordered;
  for (std::size_t b = 0; b < keep_legs.size(); ++b)
    ordered.emplace_back(keep_legs[b], keep[b]);
  std::sort(ordered.begin(), ordered.end());
  std::vector<QubitId> sup;
  for (auto& [l, q] : ordered) sup.push_back(q);
  // Reorder output legs accordingly: ordered[] gives the permutation of
  // keep's legs; rebuild the matrix in sorted-leg order.
  std::vector<int> perm(keep_legs.size());
  for (std::size_t b = 0; b < ordered.size(); ++b) {
    for (std::size_t a = 0; a < keep_legs.size(); ++a)
      if (keep_legs[a] == ordered[b].first) perm[b] = int(a);
  }
  Mat out2 = Mat::Zero(dk, dk);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j) {
      std::size_t pi = 0, pj = 0;
      for (std::size_t b = 0; b < perm.size(); ++b) {
        if (i & (std::size_t(1) << b)) pi |= std::size_t(1) << perm[b];
        if (j & (std::size_t(1) << b)) pj |= std::size_t(1) << perm[b];
      }
      out2(i, j) = out(pi, pj);
    }
  return DenseOperator(sup, std::move(out2));
}

cplx trace_of(const DenseOperator& op) { return op.mat.trace(); }

DenseOperator permuted(const DenseOperator& op,
                       const std::vector<QubitId>& new_order) {
  if (new_order == op.support) return op;
  std::vector<int> src_leg(new_order.size());
  for (std::size_t b = 0; b < new_order.size(); ++b) {
    int l = op.leg_of(new_order[b]);
    if (l < 0) throw std::invalid_argument("permuted: support mismatch");
    src_leg[b] = l;
  }
  const std::size_t d = op.dim();
  Mat out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::size_t oi = 0, oj = 0;
      for (std::size_t b = 0; b < src_leg.size(); ++b) {
        if (i & (std::size_t(1) << src_leg[b])) oi |= std::size_t(1) << b;
        if (j & (std::size_t(1) << src_leg[b])) oj |= std::size_t(1) << b;
      }
      out(oi, oj) = op.mat(i, j);
    }
  return DenseOperator(new_order, std::move(out));
}

static std::vector<QubitId> union_support(const DenseOperator& a,
                                          const DenseOperator& b) {
  std::vector<QubitId> u = a.support;
  for (const auto& q : b.support)
    if (std::find(u.begin(), u.end(), q) == u.end()) u.push_back(q);
  return u;
}

DenseOperator multiply(const DenseOperator& a, const DenseOperator& b) {
  auto u = union_support(a, b);
  DenseOperator ea = embed(a, u), eb = embed(b, u);
  return DenseOperator(u, ea.mat * eb.mat);
}

DenseOperator add(const DenseOperator& a, const DenseOperator& b, cplx wa,
                  cplx wb) {
  auto u = union_support(a, b);
  DenseOperator ea = embed(a, u), eb = embed(b, u);
  return DenseOperator(u, wa * ea.mat + wb * eb.mat);
}

cplx hs_inner(const DenseOperator& a, const DenseOperator& b) {
  DenseOperator bp = permuted(b, a.support);
  return (a.mat.adjoint() * bp.mat).trace();
}

double operator_norm(const Mat& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(m.adjoint() * m,
                                        Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
  return top > 0.0 ? std::sqrt(top) : 0.0;
}

double trace_norm(const Mat& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(m.adjoint() * m,
                                        Eigen::EigenvaluesOnly);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    acc += std::sqrt(std::max(0.0, es.eigenvalues()[i]));
  return acc;
}

double operator_norm(const DenseOperator& op) { return operator_norm(op.mat); }
double trace_norm(const DenseOperator& op) { return trace_norm(op.mat); }

Mat ket0_dm() {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = 1.0;
  return m;
}
Mat ket1_dm() {
  Mat m = Mat::Zero(2, 2);
  m(1, 1) = 1.0;
  return m;
}
Mat ketplus_dm() {
  Mat m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return m;
}

Mat pauli_mat(char letter) {
  Mat m(2, 2);
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad pauli letter");
  }
  return m;
}

}  // namespace hqs
