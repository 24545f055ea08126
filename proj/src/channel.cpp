#include "hqs/channel.hpp"

#include <algorithm>

namespace hqs {
namespace {

Mat completeness_defect(const std::vector<Mat>& ks) {
  Mat acc = Mat::Zero(ks[0].cols(), ks[0].cols());
  for (const auto& k : ks) acc += k.adjoint() * k;
  return acc - Mat::Identity(acc.rows(), acc.cols());
}

}  // namespace

QuantumChannel::QuantumChannel(std::vector<Mat> ks, std::vector<QubitId> dom,
                               std::vector<QubitId> cod, bool check)
    : kraus(std::move(ks)), domain(std::move(dom)), codomain(std::move(cod)) {
  if (kraus.empty()) throw std::invalid_argument("channel with no Kraus terms");
  const Eigen::Index dd = Eigen::Index(1) << domain.size();
  const Eigen::Index dc = Eigen::Index(1) << codomain.size();
  for (const auto& k : kraus)
    if (k.rows() != dc || k.cols() != dd)
      throw std::invalid_argument("Kraus shape mismatch");
  if (check) {
    const double defect = completeness_defect(kraus).cwiseAbs().maxCoeff();
    if (defect > 1e-12)
      throw std::invalid_argument("channel is not trace preserving");
  }
}

QuantumChannel QuantumChannel::unitary(const Mat& u, std::vector<QubitId> qs) {
  return QuantumChannel({u}, qs, qs);
}

QuantumChannel QuantumChannel::identity(std::vector<QubitId> qs) {
  const Eigen::Index d = Eigen::Index(1) << qs.size();
  return QuantumChannel({Mat::Identity(d, d)}, qs, qs);
}

QuantumChannel QuantumChannel::append_state(const DensityMatrix& omega,
                                            std::vector<QubitId> passthrough) {
  Eigen::SelfAdjointEigenSolver<Mat> es(omega.mat());
  std::vector<Mat> ks;
  const Eigen::Index dp = Eigen::Index(1) << passthrough.size();
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()[i];
    if (p < 1e-15) continue;
    Mat column = std::sqrt(p) * es.eigenvectors().col(i);
    ks.push_back(kron_le(Mat::Identity(dp, dp), column));
  }
  std::vector<QubitId> cod = passthrough;
  for (const auto& q : omega.support()) cod.push_back(q);
  return QuantumChannel(std::move(ks), std::move(passthrough), std::move(cod));
}

QuantumChannel QuantumChannel::trace_out(std::vector<QubitId> full,
                                         std::vector<QubitId> traced) {
  std::vector<int> traced_legs;
  for (const auto& q : traced) {
    auto it = std::find(full.begin(), full.end(), q);
    if (it == full.end())
      throw std::invalid_argument("trace_out: traced not in support");
    traced_legs.push_back(int(it - full.begin()));
  }
  std::vector<QubitId> keep;
  std::vector<int> keep_legs;
  for (std::size_t l = 0; l < full.size(); ++l)
    if (std::find(traced_legs.begin(), traced_legs.end(), int(l)) ==
        traced_legs.end()) {
      keep.push_back(full[l]);
      keep_legs.push_back(int(l));
    }
  const std::size_t df = std::size_t(1) << full.size();
  const std::size_t dk = std::size_t(1) << keep.size();
  const std::size_t dt = std::size_t(1) << traced.size();
  std::vector<Mat> ks;
  for (std::size_t s = 0; s < dt; ++s) {
    Mat k = Mat::Zero(dk, df);
    for (std::size_t j = 0; j < df; ++j) {
      std::size_t s_bits = 0, i_bits = 0;
      for (std::size_t b = 0; b < traced_legs.size(); ++b)
        if (j & (std::size_t(1) << traced_legs[b]))
          s_bits |= std::size_t(1) << b;
      for (std::size_t b = 0; b < keep_legs.size(); ++b)
        if (j & (std::size_t(1) << keep_legs[b])) i_bits |= std::size_t(1) << b;
      if (s_bits == s) k(i_bits, j) = 1.0;
    }
    ks.push_back(std::move(k));
  }
  return QuantumChannel(std::move(ks), std::move(full), std::move(keep));
}

QuantumChannel QuantumChannel::compose_after(const QuantumChannel& first) const {
  // Align first's codomain order to this->domain order.
  if (first.codomain.size() != domain.size())
    throw std::invalid_argument("compose: register mismatch");
  const std::size_t d = std::size_t(1) << domain.size();
  Mat perm = Mat::Zero(d, d);
  std::vector<int> src(domain.size());
  for (std::size_t b = 0; b < domain.size(); ++b) {
    auto it = std::find(first.codomain.begin(), first.codomain.end(), domain[b]);
    if (it == first.codomain.end())
      throw std::invalid_argument("compose: register mismatch");
    src[b] = int(it - first.codomain.begin());
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t o = 0;
    for (std::size_t b = 0; b < src.size(); ++b)
      if (i & (std::size_t(1) << src[b])) o |= std::size_t(1) << b;
    perm(o, i) = 1.0;
  }
  std::vector<Mat> ks;
  for (const auto& k2 : kraus)
    for (const auto& k1 : first.kraus) ks.push_back(k2 * perm * k1);
  return QuantumChannel(std::move(ks), first.domain, codomain);
}

namespace {

DenseOperator apply_kraus_family(const QuantumChannel& ch,
                                 const DenseOperator& x) {
  // Permute so the domain occupies the low legs in channel order.
  std::vector<QubitId> rest;
  for (const auto& q : x.support)
    if (std::find(ch.domain.begin(), ch.domain.end(), q) == ch.domain.end())
      rest.push_back(q);
  std::vector<QubitId> in_order = ch.domain;
  for (const auto& q : rest) in_order.push_back(q);
  DenseOperator xp = permuted(x, in_order);
  const Eigen::Index dr = Eigen::Index(1) << rest.size();
  Mat eye = Mat::Identity(dr, dr);
  Mat acc;
  bool started = false;
  for (const auto& k : ch.kraus) {
    Mat ke = kron_le(k, eye);
    Mat term = ke * xp.mat * ke.adjoint();
    if (!started) {
      acc = std::move(term);
      started = true;
    } else {
      acc += term;
    }
  }
  std::vector<QubitId> out_support = ch.codomain;
  for (const auto& q : rest) out_support.push_back(q);
  return DenseOperator(out_support, std::move(acc));
}

}  // namespace

DenseOperator apply_channel_op(const QuantumChannel& ch,
                               const DenseOperator& x) {
  for (const auto& q : ch.domain)
    if (x.leg_of(q) < 0)
      throw std::invalid_argument("apply_channel: domain not in support");
  return apply_kraus_family(ch, x);
}

DensityMatrix apply_channel(const QuantumChannel& ch,
                            const DensityMatrix& rho) {
  return DensityMatrix(apply_channel_op(ch, rho.op));
}

QuantumChannel dual_channel(const QuantumChannel& ch) {
  std::vector<Mat> ks;
  for (const auto& k : ch.kraus) ks.push_back(k.adjoint());
  return QuantumChannel(std::move(ks), ch.codomain, ch.domain,
                        /*check=*/false);
}

DenseOperator apply_dual(const QuantumChannel& dual, const DenseOperator& obs) {
  for (const auto& q : dual.domain)
    if (obs.leg_of(q) < 0)
      throw std::invalid_argument("apply_dual: domain not in support");
  return apply_kraus_family(dual, obs);
}

QuantumChannel depolarizing_projector(std::vector<QubitId> support) {
  if (support.empty())
    throw std::invalid_argument("depolarizing projector needs support");
  const int n = int(support.size());
  if (n > 6) throw std::invalid_argument("depolarizing projector too large");
  const double scale = 1.0 / double(std::size_t(1) << n);
  std::vector<Mat> ks;
  std::vector<char> letters(n, 'I');
  const char alphabet[4] = {'I', 'X', 'Y', 'Z'};
  const std::size_t total = std::size_t(1) << (2 * n);
  for (std::size_t code = 0; code < total; ++code) {
    Mat m = Mat::Ones(1, 1);
    std::size_t c = code;
    for (int q = 0; q < n; ++q) {
      m = kron_le(m, pauli_mat(alphabet[c & 3]));
      c >>= 2;
    }
    ks.push_back(scale * m);
  }
  (void)letters;
  return QuantumChannel(std::move(ks), support, support);
}

Mat superoperator_matrix(const QuantumChannel& ch) {
  const Eigen::Index dd = Eigen::Index(1) << ch.domain.size();
  const Eigen::Index dc = Eigen::Index(1) << ch.codomain.size();
  Mat s = Mat::Zero(dc * dc, dd * dd);
  for (Eigen::Index a = 0; a < dd; ++a)
    for (Eigen::Index b = 0; b < dd; ++b) {
      Mat unit = Mat::Zero(dd, dd);
      unit(a, b) = 1.0;
      Mat img = Mat::Zero(dc, dc);
      for (const auto& k : ch.kraus) img += k * unit * k.adjoint();
      Eigen::Index col = a + dd * b;
      for (Eigen::Index i = 0; i < dc; ++i)
        for (Eigen::Index j = 0; j < dc; ++j) s(i + dc * j, col) = img(i, j);
    }
  return s;
}

}  // namespace hqs
