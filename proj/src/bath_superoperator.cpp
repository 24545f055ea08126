#include "hqs/bath_superoperator.hpp"

#include <random>

namespace hqs {
namespace {

Mat unvec(const Vec& v, std::size_t d) {
  Mat m(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) m(i, j) = v[Eigen::Index(i + d * j)];
  return m;
}

Vec vec_of(const Mat& m) {
  const std::size_t d = std::size_t(m.rows());
  Vec v(Eigen::Index(d * d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) v[Eigen::Index(i + d * j)] = m(i, j);
  return v;
}

DenseOperator window_dual(const PreparationPlan& plan, int t0, int t1,
                          DenseOperator op) {
  // T*_{[t0,t1]} = T_{t0}* ... T_{t1}*: pull back latest step first.
  for (int t = t1; t >= t0; --t)
    op = heisenberg_pullback(op, plan.transition(t));
  return op;
}

}  // namespace

std::vector<QubitId> bath_segment(int c0, int ell) {
  std::vector<QubitId> out;
  for (int c = c0; c < c0 + ell; ++c) out.push_back(QubitId::bath(c));
  return out;
}

BathSuperoperator bath_superoperator(const PreparationPlan& plan, int t0,
                                     int t1,
                                     const std::vector<QubitId>& region) {
  for (const auto& q : region)
    if (q.reg != Reg::Bath || q.col < 0 || q.col >= plan.lx)
      throw std::invalid_argument("region must lie inside the bath");
  if (t0 < 1 || t1 > plan.ly)
    throw std::invalid_argument("window outside [1, ly]");
  BathSuperoperator sop;
  sop.region_in = region;
  sop.t0 = t0;
  sop.t1 = t1;

  auto build = [&](const std::vector<QubitId>& out_region, bool* closed) {
    const std::size_t din = std::size_t(1) << region.size();
    const std::size_t dout = std::size_t(1) << out_region.size();
    Mat m = Mat::Zero(Eigen::Index(dout * dout), Eigen::Index(din * din));
    *closed = true;
    for (std::size_t a = 0; a < din; ++a)
      for (std::size_t b = 0; b < din; ++b) {
        Mat unit = Mat::Zero(din, din);
        unit(a, b) = 1.0;
        DenseOperator img =
            window_dual(plan, t0, t1, DenseOperator(region, unit));
        // The image lives on the bath; check it against the out region.
        auto supp = numerical_support(img, 1e-12);
        for (const auto& q : supp)
          if (std::find(out_region.begin(), out_region.end(), q) ==
              out_region.end())
            *closed = false;
        if (!*closed) return Mat();
        // Restrict: trace away identity legs outside out_region, then embed
        // into the fixed order.
        std::vector<QubitId> keep;
        for (const auto& q : img.support)
          if (std::find(out_region.begin(), out_region.end(), q) !=
              out_region.end())
            keep.push_back(q);
        DenseOperator restricted = partial_trace(img, keep);
        const double scale =
            double(img.dim()) / double(std::size_t(1) << keep.size());
        restricted.mat /= scale;  // identity legs contribute a factor of 2
        DenseOperator embedded = embed(restricted, out_region);
        m.col(Eigen::Index(a + din * b)) = vec_of(embedded.mat);
      }
    return m;
  };

  bool closed = true;
  Mat m = build(region, &closed);
  if (closed) {
    sop.matrix = std::move(m);
    sop.region_out = region;
    sop.support_closed = true;
    return sop;
  }
  // Support growth beyond the region: rebuild on the full bath.
  sop.region_out = bath_row(plan.lx);
  bool closed_full = true;
  sop.matrix = build(sop.region_out, &closed_full);
  if (!closed_full)
    throw std::logic_error("dual image escaped the bath register");
  sop.support_closed = false;
  return sop;
}

BathSuperoperator bath_superoperator(const PreparationPlan& plan, int t0,
                                     int t1, const Ball& ball) {
  std::vector<QubitId> region(ball.members.begin(), ball.members.end());
  return bath_superoperator(plan, t0, t1, region);
}

namespace {

// Matrix of (id - Phi_out) . T* . Pi_traceless in the matrix-unit basis.
Mat centered_matrix(const BathSuperoperator& sop) {
  const std::size_t din = sop.dim_in();
  const std::size_t dout = sop.dim_out();
  Mat s = sop.matrix;
  // Output side: subtract the identity component of each column image.
  for (Eigen::Index col = 0; col < s.cols(); ++col) {
    Mat img = unvec(s.col(col), dout);
    img -= (img.trace() / double(dout)) * Mat::Identity(dout, dout);
    s.col(col) = vec_of(img);
  }
  // Input side: project out the identity direction.
  Vec vid = vec_of(Mat::Identity(din, din));
  s -= (s * vid) * vid.transpose() / double(din);
  return s;
}

double spectral_norm(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m.adjoint() * m,
                                        Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
  return top > 0 ? std::sqrt(top) : 0.0;
}

double image_norm(const Mat& s, const Mat& o, std::size_t dout) {
  return operator_norm(unvec(s * vec_of(o), dout));
}

}  // namespace

EtaBounds eta(const BathSuperoperator& sop, int restarts, int iters,
              std::uint64_t seed) {
  EtaBounds out;
  const std::size_t din = sop.dim_in();
  const std::size_t dout = sop.dim_out();
  const Mat s = centered_matrix(sop);

  out.upper = std::min(2.0, std::sqrt(double(din)) * spectral_norm(s));

  // Pauli-basis scan.
  const char alphabet[4] = {'I', 'X', 'Y', 'Z'};
  const std::size_t npauli = std::size_t(1) << (2 * sop.region_in.size());
  for (std::size_t code = 1; code < npauli; ++code) {
    Mat p = Mat::Ones(1, 1);
    std::size_t c = code;
    for (std::size_t q = 0; q < sop.region_in.size(); ++q) {
      p = kron_le(p, pauli_mat(alphabet[c & 3]));
      c >>= 2;
    }
    const double v = image_norm(s, p, dout);
    out.lower = std::max(out.lower, v);
    out.lower_hermitian = std::max(out.lower_hermitian, v);
  }

  // Projected gradient ascent over the unit operator-norm ball; both
  // Hermitian and general starts (the definition does not restrict the
  // witness).
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_start = [&](bool hermitian) {
    Mat o(din, din);
    for (std::size_t i = 0; i < din; ++i)
      for (std::size_t j = 0; j < din; ++j) o(i, j) = cplx(gauss(rng), gauss(rng));
    if (hermitian) o = (o + Mat(o.adjoint())) / 2.0;
    const double n = operator_norm(o);
    if (n > 0) o /= n;
    return o;
  };
  for (int r = 0; r < restarts; ++r) {
    const bool hermitian = r % 2 == 0;
    Mat o = random_start(hermitian);
    for (int it = 0; it < iters; ++it) {
      Mat x = unvec(s * vec_of(o), dout);
      Eigen::JacobiSVD<Mat> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
      const Mat uv =
          svd.matrixU().col(0) * svd.matrixV().col(0).adjoint();
      Mat grad = unvec(s.adjoint() * vec_of(uv), din);
      if (hermitian) grad = (grad + Mat(grad.adjoint())) / 2.0;
      const double gn = grad.norm();
      if (gn < 1e-15) break;
      o += 0.1 * grad / gn;
      const double on = operator_norm(o);
      if (on > 1.0) o /= on;
    }
    const double v = image_norm(s, o, dout);
    out.lower = std::max(out.lower, v);
    if (hermitian) out.lower_hermitian = std::max(out.lower_hermitian, v);
  }
  out.lower = std::min(out.lower, out.upper + 1e-12);
  return out;
}

EtaBounds eta_at_length_scale(const PreparationPlan& plan, int t0, int t1,
                              int ell, int restarts, int iters) {
  if (ell < 1 || ell > plan.lx)
    throw std::invalid_argument("length scale outside [1, lx]");
  EtaBounds best;
  for (int c0 = 0; c0 + ell <= plan.lx; ++c0) {
    auto sop = bath_superoperator(plan, t0, t1, bath_segment(c0, ell));
    EtaBounds b = eta(sop, restarts, iters);
    best.lower = std::max(best.lower, b.lower);
    best.lower_hermitian = std::max(best.lower_hermitian, b.lower_hermitian);
    best.upper = std::max(best.upper, b.upper);
  }
  return best;
}

}  // namespace hqs
