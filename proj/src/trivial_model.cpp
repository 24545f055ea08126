#include "hqs/trivial_model.hpp"

namespace hqs {

Mat completion_unitary(const Vec& psi) {
  if (psi.size() != 2) throw std::invalid_argument("single-qubit ket required");
  Vec n = psi.normalized();
  Mat u(2, 2);
  u(0, 0) = n[0];
  u(1, 0) = n[1];
  u(0, 1) = -std::conj(n[1]);
  u(1, 1) = std::conj(n[0]);
  return u;
}

namespace {

EdgeSet trivial_adjacency(int lx, int t) {
  EdgeSet adjacency;
  for (int c = 0; c < lx; ++c) {
    if (c + 1 < lx) add_edge(adjacency, QubitId::bath(c), QubitId::bath(c + 1));
    add_edge(adjacency, QubitId::bath(c), QubitId::system(t, c));
  }
  return adjacency;
}

// Pack single-qubit unitaries into two layers of neighboring-pair gates.
void push_single_qubit_wall(CircuitBuilder& builder, int lx, int t,
                            const std::vector<Mat>& us) {
  if (lx == 1) {
    builder.push_layer(
        make_u4(QubitId::bath(0), QubitId::system(t, 0),
                kron_le(us[0], Mat::Identity(2, 2))));
    return;
  }
  builder.begin_layer();
  for (int c = 0; c + 1 < lx; c += 2)
    builder.push(make_u4(QubitId::bath(c), QubitId::bath(c + 1),
                         kron_le(us[c], us[c + 1])));
  if (lx % 2 == 1)
    builder.push_layer(make_u4(QubitId::bath(lx - 1), QubitId::bath(lx - 2),
                               kron_le(us[lx - 1], Mat::Identity(2, 2))));
}

}  // namespace

TransitionMap trivial_state_transition(int lx, int t,
                                       const std::vector<Vec>& target_row_kets) {
  if (int(target_row_kets.size()) != lx)
    throw std::invalid_argument("one target ket per column required");
  CircuitBuilder builder(trivial_adjacency(lx, t));
  builder.begin_layer();
  for (int c = 0; c < lx; ++c)
    builder.push(make_gate("SWAP", QubitId::bath(c), QubitId::system(t, c)));
  std::vector<Mat> us;
  bool all_identity = true;
  for (const auto& k : target_row_kets) {
    us.push_back(completion_unitary(k));
    all_identity = all_identity && us.back().isIdentity(1e-15);
  }
  if (!all_identity) push_single_qubit_wall(builder, lx, t, us);

  RegisterPartition part;
  part.bath = bath_row(lx);
  part.system = system_row(t, lx);
  std::map<QubitId, Mat> omega_system;
  for (const auto& q : part.system) omega_system.emplace(q, ket0_dm());
  return build_transition_map(builder.finish(), std::move(omega_system), {},
                              std::move(part), t, lx);
}

TransitionMap trivial_zero_transition(int lx, int t) {
  std::vector<Vec> kets(lx, (Vec(2) << 1.0, 0.0).finished());
  return trivial_state_transition(lx, t, kets);
}

TransitionMap trivial_no_swap_transition(int lx, int t) {
  CircuitBuilder builder(trivial_adjacency(lx, t));
  Mat h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  std::vector<Mat> us(lx, h);
  push_single_qubit_wall(builder, lx, t, us);
  RegisterPartition part;
  part.bath = bath_row(lx);
  part.system = system_row(t, lx);
  std::map<QubitId, Mat> omega_system;
  for (const auto& q : part.system) omega_system.emplace(q, ket0_dm());
  return build_transition_map(builder.finish(), std::move(omega_system), {},
                              std::move(part), t, lx);
}

}  // namespace hqs
