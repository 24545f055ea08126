#include "hqs/register_state.hpp"

#include <array>
#include <cstdlib>

#include "hqs/kernels.hpp"

namespace hqs {
namespace {

using kernels::ops;

void mat_to_array(const Mat& m, cplx* out, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i * n + j] = m(i, j);
}

// Insert zero bits at the (ascending) positions, shifting the rest up.
std::size_t expand_bits(std::size_t r, const std::vector<int>& pos) {
  std::size_t out = r;
  for (int p : pos) {
    const std::size_t low = out & ((std::size_t(1) << p) - 1);
    out = ((out >> p) << (p + 1)) | low;
  }
  return out;
}

}  // namespace

int dense_qubit_ceiling() {
  static const int v = [] {
    const char* e = std::getenv("HQS_DENSE_QUBIT_CEILING");
    if (e != nullptr) {
      int parsed = std::atoi(e);
      if (parsed > 0) return parsed;
    }
    return 13;
  }();
  return v;
}

DenseRegister DenseRegister::density(int ceiling) {
  return DenseRegister(true, ceiling);
}
DenseRegister DenseRegister::pure(int ceiling) {
  return DenseRegister(false, ceiling);
}

int DenseRegister::index_of(const QubitId& q) const {
  for (std::size_t i = 0; i < qubits_.size(); ++i)
    if (qubits_[i] == q) return int(i);
  return -1;
}

int DenseRegister::require(const QubitId& q) const {
  int i = index_of(q);
  if (i < 0) throw std::invalid_argument("qubit not live: " + to_string(q));
  return i;
}

void DenseRegister::check_ceiling(int extra) const {
  if (num_qubits() + extra > ceiling_)
    throw ResourceError("dense register would exceed the qubit ceiling (" +
                        std::to_string(ceiling_) + ")");
}

void DenseRegister::add_qubit(const QubitId& q, const Mat& m) {
  if (!density_) throw std::logic_error("add_qubit(Mat) needs density mode");
  if (index_of(q) >= 0)
    throw std::invalid_argument("qubit already live: " + to_string(q));
  check_ceiling(1);
  const std::size_t n = data_.size();
  std::vector<cplx> out(n * 4, cplx(0.0));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const cplx w = m(a, b);
      if (w == cplx(0.0)) continue;
      ops().axpy(out.data() + n * (a + 2 * b), data_.data(), w, n);
    }
  data_ = std::move(out);
  qubits_.push_back(q);
}

void DenseRegister::add_qubit_ket(const QubitId& q, const Vec& psi) {
  if (density_) {
    add_qubit(q, ket_matrix(psi));
    return;
  }
  if (index_of(q) >= 0)
    throw std::invalid_argument("qubit already live: " + to_string(q));
  check_ceiling(1);
  const std::size_t n = data_.size();
  std::vector<cplx> out(n * 2, cplx(0.0));
  ops().axpy(out.data(), data_.data(), psi[0], n);
  ops().axpy(out.data() + n, data_.data(), psi[1], n);
  data_ = std::move(out);
  qubits_.push_back(q);
}

void DenseRegister::apply_ket_only(int qubit_index, const Mat& m) {
  cplx a[4];
  mat_to_array(m, a, 2);
  const int leg = density_ ? 2 * qubit_index : qubit_index;
  ops().apply1(data_.data(), data_.size(), leg, a);
}

void DenseRegister::apply_pair1(const QubitId& q, const Mat& m) {
  const int j = require(q);
  cplx a[4];
  mat_to_array(m, a, 2);
  if (!density_) {
    ops().apply1(data_.data(), data_.size(), j, a);
    return;
  }
  ops().apply1(data_.data(), data_.size(), 2 * j, a);
  cplx ac[4];
  for (int i = 0; i < 4; ++i) ac[i] = std::conj(a[i]);
  ops().apply1(data_.data(), data_.size(), 2 * j + 1, ac);
}

void DenseRegister::apply_pair2(const QubitId& qa, const QubitId& qb,
                                const Mat& m) {
  const int ja = require(qa), jb = require(qb);
  cplx a[16];
  mat_to_array(m, a, 4);
  if (!density_) {
    ops().apply2(data_.data(), data_.size(), ja, jb, a);
    return;
  }
  ops().apply2(data_.data(), data_.size(), 2 * ja, 2 * jb, a);
  cplx ac[16];
  for (int i = 0; i < 16; ++i) ac[i] = std::conj(a[i]);
  ops().apply2(data_.data(), data_.size(), 2 * ja + 1, 2 * jb + 1, ac);
}

void DenseRegister::apply_kraus1(const QubitId& q, const std::vector<Mat>& ks) {
  if (!density_) throw std::logic_error("Kraus needs density mode");
  if (ks.size() == 1) {
    apply_pair1(q, ks[0]);
    return;
  }
  const std::vector<cplx> saved = data_;
  std::vector<cplx> acc(data_.size(), cplx(0.0));
  for (const auto& k : ks) {
    data_ = saved;
    apply_pair1(q, k);
    ops().axpy(acc.data(), data_.data(), cplx(1.0), acc.size());
  }
  data_ = std::move(acc);
}

void DenseRegister::apply_kraus2(const QubitId& a, const QubitId& b,
                                 const std::vector<Mat>& ks) {
  if (!density_) throw std::logic_error("Kraus needs density mode");
  if (ks.size() == 1) {
    apply_pair2(a, b, ks[0]);
    return;
  }
  const std::vector<cplx> saved = data_;
  std::vector<cplx> acc(data_.size(), cplx(0.0));
  for (const auto& k : ks) {
    data_ = saved;
    apply_pair2(a, b, k);
    ops().axpy(acc.data(), data_.data(), cplx(1.0), acc.size());
  }
  data_ = std::move(acc);
}

void DenseRegister::depolarize_pair(const QubitId& a, const QubitId& b,
                                    double p) {
  if (!density_) throw std::logic_error("depolarize needs density mode");
  if (p == 0.0) return;
  const int ja = require(a), jb = require(b);
  const int lo = std::min(ja, jb), hi = std::max(ja, jb);
  const std::size_t n = data_.size();
  // reduced = Tr_ab[rho]; trace the higher pair first so the lower pair's
  // legs keep their positions.
  std::vector<cplx> t1(n / 4);
  ops().trace_leg_pair(data_.data(), n, 2 * hi, 2 * hi + 1, t1.data());
  std::vector<cplx> reduced(n / 16);
  ops().trace_leg_pair(t1.data(), n / 4, 2 * lo, 2 * lo + 1, reduced.data());
  // rho <- (1-p) rho.
  ops().blend(data_.data(), data_.data(), cplx(1.0 - p), cplx(0.0), n);
  // rho += (p/4) reduced (x) I_pair.
  const std::vector<int> pos = {2 * lo, 2 * lo + 1, 2 * hi, 2 * hi + 1};
  const std::size_t diag_a =
      (std::size_t(1) << (2 * lo)) | (std::size_t(1) << (2 * lo + 1));
  const std::size_t diag_b =
      (std::size_t(1) << (2 * hi)) | (std::size_t(1) << (2 * hi + 1));
  const cplx w = cplx(p / 4.0);
  for (std::size_t r = 0; r < reduced.size(); ++r) {
    const std::size_t base = expand_bits(r, pos);
    const cplx v = w * reduced[r];
    data_[base] += v;
    data_[base | diag_a] += v;
    data_[base | diag_b] += v;
    data_[base | diag_a | diag_b] += v;
  }
}

void DenseRegister::mix_with_conjugated(const QubitId& a, const QubitId& b,
                                        const Mat& p_mat, double p) {
  if (!density_) throw std::logic_error("mixing needs density mode");
  if (p == 0.0) return;
  const std::vector<cplx> saved = data_;
  apply_pair2(a, b, p_mat);
  ops().blend(data_.data(), saved.data(), cplx(p), cplx(1.0 - p), data_.size());
}

void DenseRegister::trace_out(const QubitId& q) {
  fold(q, Mat::Identity(2, 2));
}

void DenseRegister::fold(const QubitId& q, const Mat& m) {
  if (!density_) throw std::logic_error("fold needs density mode");
  const int j = require(q);
  if (!m.isIdentity(0.0)) apply_ket_only(j, m);
  std::vector<cplx> out(data_.size() / 4);
  ops().trace_leg_pair(data_.data(), data_.size(), 2 * j, 2 * j + 1,
                       out.data());
  data_ = std::move(out);
  qubits_.erase(qubits_.begin() + j);
}

void DenseRegister::drop_product_qubit(const QubitId& q, double tol) {
  if (density_) throw std::logic_error("drop_product_qubit is pure-mode");
  const int j = require(q);
  const std::size_t n = data_.size();
  const std::size_t s = std::size_t(1) << j;
  cplx r00 = 0, r01 = 0, r11 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i & s) continue;
    r00 += std::conj(data_[i]) * data_[i];
    r11 += std::conj(data_[i + s]) * data_[i + s];
    r01 += std::conj(data_[i]) * data_[i + s];
  }
  const double tr = std::real(r00 + r11);
  const double purity =
      std::real(r00 * r00 + r11 * r11 + 2.0 * r01 * std::conj(r01)) /
      (tr * tr);
  if (std::abs(purity - 1.0) > tol)
    throw std::logic_error("drop_product_qubit: qubit is entangled");
  Vec psi(2);
  if (std::abs(r01) > 1e-14) {
    const double a = std::real(r00), d = std::real(r11);
    const double lam =
        0.5 * (a + d + std::sqrt(std::max(0.0, (a - d) * (a - d) +
                                                   4.0 * std::norm(r01))));
    psi[0] = r01;
    psi[1] = lam - a;
  } else if (std::real(r00) >= std::real(r11)) {
    psi[0] = 1.0;
    psi[1] = 0.0;
  } else {
    psi[0] = 0.0;
    psi[1] = 1.0;
  }
  psi.normalize();
  std::vector<cplx> out(n / 2, cplx(0.0));
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i & s) continue;
    out[w++] = std::conj(psi[0]) * data_[i] + std::conj(psi[1]) * data_[i + s];
  }
  data_ = std::move(out);
  qubits_.erase(qubits_.begin() + j);
}

cplx DenseRegister::trace() const {
  if (!density_) throw std::logic_error("trace needs density mode");
  std::vector<cplx> cur = data_;
  std::size_t n = cur.size();
  for (int j = num_qubits() - 1; j >= 0; --j) {
    std::vector<cplx> next(n / 4);
    ops().trace_leg_pair(cur.data(), n, 2 * j, 2 * j + 1, next.data());
    cur = std::move(next);
    n /= 4;
  }
  return cur.empty() ? cplx(0.0) : cur[0];
}

double DenseRegister::norm2() const {
  if (density_) throw std::logic_error("norm2 is pure-mode");
  return std::real(ops().dot(data_.data(), data_.data(), data_.size()));
}

cplx DenseRegister::expect_pauli(const std::map<QubitId, char>& letters) const {
  DenseRegister copy = *this;
  for (const auto& [q, c] : letters) {
    if (c == 'I') continue;
    if (density_) {
      copy.apply_ket_only(copy.require(q), pauli_mat(c));
    } else {
      copy.apply_pair1(q, pauli_mat(c));
    }
  }
  if (density_) return copy.trace();
  return ops().dot(data_.data(), copy.data_.data(), data_.size());
}

DenseOperator DenseRegister::to_operator() const {
  if (!density_) throw std::logic_error("to_operator needs density mode");
  const int k = num_qubits();
  if (k > 12) throw ResourceError("to_operator register too large");
  const std::size_t d = std::size_t(1) << k;
  Mat m(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      std::size_t idx = 0;
      for (int j = 0; j < k; ++j) {
        if (a & (std::size_t(1) << j)) idx |= std::size_t(1) << (2 * j);
        if (b & (std::size_t(1) << j)) idx |= std::size_t(1) << (2 * j + 1);
      }
      m(a, b) = data_[idx];
    }
  return DenseOperator(qubits_, std::move(m));
}

void DenseRegister::load_operator(const DenseOperator& op) {
  if (!density_) throw std::logic_error("load_operator needs density mode");
  const int k = op.num_qubits();
  if (k > ceiling_) throw ResourceError("operator exceeds the qubit ceiling");
  qubits_ = op.support;
  const std::size_t d = op.dim();
  data_.assign(d * d, cplx(0.0));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      std::size_t idx = 0;
      for (int j = 0; j < k; ++j) {
        if (a & (std::size_t(1) << j)) idx |= std::size_t(1) << (2 * j);
        if (b & (std::size_t(1) << j)) idx |= std::size_t(1) << (2 * j + 1);
      }
      data_[idx] = op.mat(a, b);
    }
}

}  // namespace hqs
