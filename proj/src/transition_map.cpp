#include "hqs/transition_map.hpp"

#include <algorithm>

namespace hqs {

const Mat& TransitionMap::omega_of(const QubitId& q) const {
  auto it = omega_system.find(q);
  if (it != omega_system.end()) return it->second;
  it = omega_sink.find(q);
  if (it != omega_sink.end()) return it->second;
  throw std::invalid_argument("no omega for " + to_string(q));
}

const Mat& TransitionMap::effective_omega(const QubitId& q) const {
  auto it = noisy_omega.find(q);
  if (it != noisy_omega.end()) return it->second;
  return omega_of(q);
}

TransitionMap build_transition_map(LayeredCircuit circuit,
                                   std::map<QubitId, Mat> omega_system,
                                   std::map<QubitId, Mat> omega_sink,
                                   RegisterPartition partition, int row,
                                   int lx) {
  TransitionMap tm;
  tm.row = row;
  tm.lx = lx;
  tm.bath = std::move(partition.bath);
  tm.system = std::move(partition.system);
  tm.sink = std::move(partition.sink);
  std::set<QubitId> all;
  for (const auto* reg : {&tm.bath, &tm.system, &tm.sink})
    for (const auto& q : *reg)
      if (!all.insert(q).second)
        throw std::invalid_argument("overlapping registers at " + to_string(q));
  for (const auto& q : circuit.support())
    if (all.count(q) == 0)
      throw std::invalid_argument("circuit acts outside the partition: " +
                                  to_string(q));
  for (const auto& q : tm.system)
    if (omega_system.count(q) == 0)
      throw std::invalid_argument("missing omega_system for " + to_string(q));
  for (const auto& q : tm.sink)
    if (omega_sink.count(q) == 0)
      throw std::invalid_argument("missing omega_sink for " + to_string(q));
  tm.omega_system = std::move(omega_system);
  tm.omega_sink = std::move(omega_sink);
  tm.circuit = std::move(circuit);
  return tm;
}

TransitionMap apply_noise(const TransitionMap& tm, const NoiseSpec& spec) {
  if (spec.epsilon < 0.0 || spec.epsilon > 1.0)
    throw std::invalid_argument("epsilon outside [0,1]");
  TransitionMap out = tm;
  out.noise = spec;
  out.gate_noise.clear();
  out.noisy_omega.clear();
  out.state_certs.clear();
  NoiseStream stream(spec.seed, 0x67617465ULL + std::uint64_t(tm.row));
  for (const Gate2q* g : tm.circuit.flattened())
    out.gate_noise.push_back(draw_gate_noise(g->u, spec, stream));
  NoiseStream sstream(spec.seed, 0x73746174ULL + std::uint64_t(tm.row));
  for (const auto& m : {&tm.omega_system, &tm.omega_sink})
    for (const auto& [q, omega] : *m) {
      NoiseCertificate cert;
      Mat noisy = noisy_state_factor(omega, spec, sstream, &cert);
      out.noisy_omega.emplace(q, std::move(noisy));
      out.state_certs.push_back(std::move(cert));
    }
  return out;
}

}  // namespace hqs
