#include "hqs/noise.hpp"

#include <cmath>
#include <sstream>

namespace hqs {
namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const char kPauliAlphabet[4] = {'I', 'X', 'Y', 'Z'};

}  // namespace

NoiseStream::NoiseStream(std::uint64_t seed, std::uint64_t salt)
    : state(seed ^ (salt * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL)) {
  // burn-in decorrelates nearby (seed, salt) pairs
  next_u64();
  next_u64();
}

std::uint64_t NoiseStream::next_u64() { return splitmix64(state); }

double NoiseStream::next_unit() {
  return double(next_u64() >> 11) * 0x1.0p-53;
}

Mat two_qubit_pauli(char fast, char slow) {
  return kron_le(pauli_mat(fast), pauli_mat(slow));
}

GateNoise draw_gate_noise(const Mat& u, const NoiseSpec& spec,
                          NoiseStream& stream) {
  GateNoise out;
  const double eps = spec.epsilon;
  if (eps < 0.0 || eps > 1.0)
    throw std::invalid_argument("epsilon outside [0,1]");
  if (!spec.on_gates || eps == 0.0) {
    out.kind = GateNoise::Kind::None;
    out.cert = {"gate", "none", 0.0, 0.0, "exact"};
    return out;
  }
  switch (spec.gate_family) {
    case GateNoiseFamily::DepolarizeAfterGate: {
      const double p = eps / 2.0;
      out.kind = GateNoise::Kind::Depolarize;
      out.p = p;
      std::ostringstream chain;
      chain << "U~ = (1-p) U + p Phi.U with p = eps/2; "
            << "||U~ - U||_dia = p ||Phi.U - U||_dia <= 2p = " << 2 * p;
      out.cert = {"gate", "depolarize-after-gate", p, 2 * p, chain.str()};
      break;
    }
    case GateNoiseFamily::CoherentOverrotation: {
      // V = exp(-i theta P/2) with a random non-identity two-qubit Pauli P
      // and random sign; ||V - I|| = 2|sin(theta/4)| on each eigenspace,
      // so ||U~ - U||_dia <= 2||V - I|| = 4|sin(theta/4)|.
      const double theta = 4.0 * std::asin(eps / 4.0) *
                           (stream.next_unit() < 0.5 ? 1.0 : -1.0);
      int code = 1 + int(stream.next_u64() % 15);
      const Mat p4 =
          two_qubit_pauli(kPauliAlphabet[code & 3], kPauliAlphabet[code >> 2]);
      const Mat v = std::cos(theta / 2.0) * Mat::Identity(4, 4) -
                    cplx(0, 1) * std::sin(theta / 2.0) * p4;
      out.kind = GateNoise::Kind::Coherent;
      out.pauli = p4;
      out.u_noisy = v * u;
      const double bound = 4.0 * std::abs(std::sin(theta / 4.0));
      std::ostringstream chain;
      chain << "U~ = exp(-i theta P/2) U, theta = " << theta
            << "; ||U~ - U||_dia <= 2||V - I|| = 4|sin(theta/4)| = " << bound;
      out.cert = {"gate", "coherent-overrotation", theta, bound, chain.str()};
      break;
    }
    case GateNoiseFamily::MixWithFixedChannel: {
      const double p = eps / 2.0;
      out.kind = GateNoise::Kind::PauliMix;
      out.p = p;
      out.pauli = two_qubit_pauli('Z', 'Z');
      std::ostringstream chain;
      chain << "U~ = (1-p) U + p (ZZ)U(.)U^(ZZ) with p = eps/2; "
            << "||U~ - U||_dia <= 2p = " << 2 * p;
      out.cert = {"gate", "mix-with-fixed-channel", p, 2 * p, chain.str()};
      break;
    }
  }
  if (out.cert.certified_bound > eps + 1e-12)
    throw std::logic_error("gate noise certificate exceeds epsilon");
  return out;
}

Mat noisy_state_factor(const Mat& omega, const NoiseSpec& spec,
                       NoiseStream& stream, NoiseCertificate* cert) {
  const double eps = spec.epsilon;
  if (!spec.on_states || eps == 0.0) {
    if (cert != nullptr) *cert = {"state", "none", 0.0, 0.0, "exact"};
    return omega;
  }
  const double q = eps / 2.0;
  Mat noisy;
  std::string family;
  switch (spec.state_family) {
    case StateNoiseFamily::MixWithMaximallyMixed: {
      noisy = (1.0 - q) * omega + q * 0.5 * Mat::Identity(2, 2);
      family = "mix-with-maximally-mixed";
      break;
    }
    case StateNoiseFamily::MixWithOrthogonal: {
      // For a pure omega = |psi><psi| mix with |psi_perp><psi_perp|; the
      // distance is exactly 2q. Mixed omegas fall back to the maximally
      // mixed direction (same certificate).
      Eigen::SelfAdjointEigenSolver<Mat> es(omega);
      if (es.eigenvalues().maxCoeff() > 1.0 - 1e-12) {
        const Vec top = es.eigenvectors().col(1);
        const Vec bot = es.eigenvectors().col(0);
        (void)top;
        noisy = (1.0 - q) * omega + q * bot * bot.adjoint();
      } else {
        noisy = (1.0 - q) * omega + q * 0.5 * Mat::Identity(2, 2);
      }
      family = "mix-with-orthogonal";
      break;
    }
  }
  (void)stream;
  if (cert != nullptr) {
    std::ostringstream chain;
    chain << "w~ = (1-q) w + q w' with q = eps/2; ||w~ - w||_1 = q||w - w'||_1"
          << " <= 2q = " << 2 * q;
    *cert = {"state", family, q, 2 * q, chain.str()};
  }
  return noisy;
}

std::map<QubitId, Mat> noisy_pauli_factors(const PauliString& p,
                                           const NoiseSpec& spec) {
  std::map<QubitId, Mat> out;
  const double eps = spec.epsilon;
  for (const auto& [q, letter] : p.letters) {
    const Mat sigma = pauli_mat(letter);
    if (!spec.on_meas || eps == 0.0) {
      out.emplace(q, sigma);
      continue;
    }
    switch (spec.meas_family) {
      case MeasNoiseFamily::Shrink:
        // ||(1-eps) s - s|| = eps, ||(1-eps) s|| = 1-eps <= 1.
        out.emplace(q, (1.0 - eps) * sigma);
        break;
      case MeasNoiseFamily::RotateAxis: {
        // Conjugate by exp(-i phi A/2) for an anticommuting axis A drawn
        // per qubit; ||s~ - s|| = 2|sin(phi/2)| = eps exactly, ||s~|| = 1.
        NoiseStream stream(spec.seed,
                           0x6d656173ULL ^ (std::uint64_t(q.reg) << 48) ^
                               (std::uint64_t(std::uint16_t(q.row)) << 24) ^
                               std::uint64_t(std::uint16_t(q.col)));
        const char axes_x[] = {'Y', 'Z'};
        const char axes_y[] = {'Z', 'X'};
        const char axes_z[] = {'X', 'Y'};
        const char* axes = letter == 'X' ? axes_x : (letter == 'Y' ? axes_y : axes_z);
        const char axis = axes[stream.next_u64() % 2];
        const double phi = 2.0 * std::asin(eps / 2.0) *
                           (stream.next_unit() < 0.5 ? 1.0 : -1.0);
        const Mat a = pauli_mat(axis);
        const Mat r = std::cos(phi / 2.0) * Mat::Identity(2, 2) -
                      cplx(0, 1) * std::sin(phi / 2.0) * a;
        out.emplace(q, r * sigma * r.adjoint());
        break;
      }
    }
  }
  return out;
}

DenseOperator noisy_pauli(const PauliString& p, const NoiseSpec& spec) {
  auto factors = noisy_pauli_factors(p, spec);
  Mat m = Mat::Ones(1, 1);
  std::vector<QubitId> support;
  for (const auto& [q, f] : factors) {
    m = kron_le(m, f);
    support.push_back(q);
  }
  return DenseOperator(support, p.phase() * m);
}

}  // namespace hqs
