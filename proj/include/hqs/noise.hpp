#pragma once

#include <cstdint>
#include <optional>

#include "hqs/pauli.hpp"

namespace hqs {

enum class GateNoiseFamily {
  DepolarizeAfterGate,
  CoherentOverrotation,
  MixWithFixedChannel
};
enum class StateNoiseFamily { MixWithOrthogonal, MixWithMaximallyMixed };
enum class MeasNoiseFamily { Shrink, RotateAxis };

// One epsilon certifies all three element families: gates in diamond norm,
// single-qubit states in trace norm, Pauli factors in operator norm. The
// on_* switches mask individual families (the closed-form experiment rows
// need measurement-only noise).
struct NoiseSpec {
  double epsilon{0.0};
  GateNoiseFamily gate_family{GateNoiseFamily::DepolarizeAfterGate};
  StateNoiseFamily state_family{StateNoiseFamily::MixWithMaximallyMixed};
  MeasNoiseFamily meas_family{MeasNoiseFamily::Shrink};
  std::uint64_t seed{0};
  bool on_gates{true};
  bool on_states{true};
  bool on_meas{true};
};

// The analytic chain certifying the element-wise bound, logged per element.
struct NoiseCertificate {
  std::string element;        // "gate", "state", "pauli"
  std::string family;
  double parameter{0.0};      // mixing weight p or rotation angle theta
  double certified_bound{0.0};
  std::string chain;          // human-readable derivation
};

// Gate replacement produced by apply_noise. The noisy channel is
//   Depolarize:  rho -> (1-p) U rho U^dag + p Phi_pair(U rho U^dag)
//   PauliMix:    rho -> (1-p) U rho U^dag + p (PU) rho (PU)^dag
//   Coherent:    rho -> V rho V^dag with V = exp(-i theta P / 2) U
struct GateNoise {
  enum class Kind { None, Depolarize, PauliMix, Coherent };
  Kind kind{Kind::None};
  double p{0.0};       // mixing weight
  Mat pauli;           // 4x4 Pauli factor (PauliMix / Coherent generator)
  Mat u_noisy;         // 4x4 noisy unitary (Coherent)
  NoiseCertificate cert;
};

// Deterministic per-element draws: same spec -> bit-identical noise.
struct NoiseStream {
  std::uint64_t state;
  explicit NoiseStream(std::uint64_t seed, std::uint64_t salt);
  std::uint64_t next_u64();
  double next_unit();  // [0, 1)
};

GateNoise draw_gate_noise(const Mat& u, const NoiseSpec& spec,
                          NoiseStream& stream);

// Noisy single-qubit state: ||noisy - omega||_1 <= epsilon by construction.
Mat noisy_state_factor(const Mat& omega, const NoiseSpec& spec,
                       NoiseStream& stream, NoiseCertificate* cert = nullptr);

// Noisy Pauli measurement factors: per qubit ||sigma~ - sigma|| <= epsilon
// and ||sigma~|| <= 1; identity factors stay exact.
std::map<QubitId, Mat> noisy_pauli_factors(const PauliString& p,
                                           const NoiseSpec& spec);
DenseOperator noisy_pauli(const PauliString& p, const NoiseSpec& spec);

// 4x4 matrix of a two-qubit Pauli (letters on fast, slow legs).
Mat two_qubit_pauli(char fast, char slow);

}  // namespace hqs
