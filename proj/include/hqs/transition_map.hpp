#pragma once

#include "hqs/channel.hpp"
#include "hqs/layered_circuit.hpp"
#include "hqs/noise.hpp"

namespace hqs {

// The Eq.-3 object: initialize system and sink to fixed product states,
// apply a layered local circuit to bath+system+sink, trace out the sink.
// As a channel this maps B -> B u S_t. Subroutine ancillas are sink qubits
// with one slot per subroutine, so the map keeps the single-unitary form;
// the executor materializes them lazily.
struct TransitionMap {
  int row{1};
  int lx{1};
  std::vector<QubitId> bath;
  std::vector<QubitId> system;
  std::vector<QubitId> sink;  // sink row qubits and ancillas
  std::map<QubitId, Mat> omega_system;  // 2x2 states
  std::map<QubitId, Mat> omega_sink;
  LayeredCircuit circuit;

  // Noise annotations; empty <=> noiseless. gate_noise aligns with
  // circuit.flattened() order.
  std::optional<NoiseSpec> noise;
  std::vector<GateNoise> gate_noise;
  std::map<QubitId, Mat> noisy_omega;
  std::vector<NoiseCertificate> state_certs;

  bool noisy() const { return noise.has_value(); }
  const Mat& omega_of(const QubitId& q) const;
  const Mat& effective_omega(const QubitId& q) const;  // noisy when present
};

struct RegisterPartition {
  std::vector<QubitId> bath, system, sink;
};

TransitionMap build_transition_map(LayeredCircuit circuit,
                                   std::map<QubitId, Mat> omega_system,
                                   std::map<QubitId, Mat> omega_sink,
                                   RegisterPartition partition, int row,
                                   int lx);

// Gate-by-gate noisy counterpart with certified element bounds; shares the
// circuit object so the (U, U~) pairing is exact. epsilon = 0 returns an
// exactly equal map.
TransitionMap apply_noise(const TransitionMap& tm, const NoiseSpec& spec);

// Dense channel forms (small registers; oracle and mixing paths).
QuantumChannel transition_channel(const TransitionMap& tm);  // B -> B u S_t
QuantumChannel bath_channel(const TransitionMap& tm);        // B -> B

}  // namespace hqs
