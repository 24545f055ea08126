#include "hqs/engine.hpp"

#include <algorithm>
#include <functional>

namespace hqs {
namespace {

// Last flattened-gate index touching each qubit; -1 when untouched.
std::map<QubitId, int> last_touch(const TransitionMap& tm) {
  std::map<QubitId, int> out;
  auto gates = tm.circuit.flattened();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    out[gates[i]->a] = int(i);
    out[gates[i]->b] = int(i);
  }
  return out;
}

bool is_register_member(const std::vector<QubitId>& reg, const QubitId& q) {
  return std::find(reg.begin(), reg.end(), q) != reg.end();
}

}  // namespace

void apply_transition(DenseRegister& reg, const TransitionMap& tm) {
  const auto touches = last_touch(tm);
  auto gates = tm.circuit.flattened();
  auto materialize = [&](const QubitId& q) {
    if (reg.has(q)) return;
    if (is_register_member(tm.system, q) || is_register_member(tm.sink, q)) {
      reg.add_qubit(q, tm.effective_omega(q));
      return;
    }
    throw std::invalid_argument("transition gate touches a qubit that is not "
                                "live and not initialized here: " +
                                to_string(q));
  };
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate2q& g = *gates[i];
    materialize(g.a);
    materialize(g.b);
    const GateNoise* noise =
        tm.gate_noise.empty() ? nullptr : &tm.gate_noise[i];
    if (noise == nullptr || noise->kind == GateNoise::Kind::None) {
      reg.apply_pair2(g.a, g.b, g.u);
    } else if (noise->kind == GateNoise::Kind::Coherent) {
      reg.apply_pair2(g.a, g.b, noise->u_noisy);
    } else if (noise->kind == GateNoise::Kind::Depolarize) {
      reg.apply_pair2(g.a, g.b, g.u);
      reg.depolarize_pair(g.a, g.b, noise->p);
    } else {
      reg.apply_pair2(g.a, g.b, g.u);
      reg.mix_with_conjugated(g.a, g.b, noise->pauli, noise->p);
    }
    // Sink qubits (ancillas in particular) leave the register right after
    // their last gate.
    for (const QubitId& q : {g.a, g.b})
      if (is_register_member(tm.sink, q) && touches.at(q) == int(i))
        reg.trace_out(q);
  }
  // Untouched sink qubits were never materialized; untouched system qubits
  // still need their omega so the emitted row is complete.
  for (const auto& q : tm.system) materialize(q);
}

namespace {

void add_bath(DenseRegister& reg, const PreparationPlan& plan) {
  NoiseStream stream(plan.noise ? plan.noise->seed : 0, 0x62617468ULL);
  for (const auto& [q, m] : plan.rho_bath_init) {
    if (plan.noise) {
      reg.add_qubit(q, noisy_state_factor(m, *plan.noise, stream));
    } else {
      reg.add_qubit(q, m);
    }
  }
}

}  // namespace

DensityMatrix evolve_bath(const PreparationPlan& plan, int upto_t) {
  if (upto_t < 0 || upto_t > plan.ly)
    throw std::invalid_argument("upto_t out of range");
  DenseRegister reg = DenseRegister::density();
  add_bath(reg, plan);
  for (int t = 1; t <= upto_t; ++t) {
    apply_transition(reg, plan.transition(t));
    for (const auto& q : plan.transition(t).system) reg.trace_out(q);
  }
  return DensityMatrix(reg.to_operator());
}

double expectation_local(const PreparationPlan& plan,
                         const LocalObservable& obs) {
  if (obs.last_row > plan.ly)
    throw std::invalid_argument("observable window exceeds ly");
  std::map<QubitId, Mat> factors;
  if (plan.noise) {
    factors = noisy_pauli_factors(obs.pauli, *plan.noise);
  } else {
    for (const auto& [q, c] : obs.pauli.letters)
      factors.emplace(q, pauli_mat(c));
  }
  DenseRegister reg = DenseRegister::density();
  add_bath(reg, plan);
  for (int t = 1; t <= obs.last_row; ++t) {
    apply_transition(reg, plan.transition(t));
    // Fold the emitted row right away: later transitions never touch it.
    for (const auto& q : plan.transition(t).system) {
      auto it = factors.find(q);
      if (it == factors.end()) {
        reg.trace_out(q);
      } else {
        reg.fold(q, it->second);
      }
    }
  }
  const cplx value = reg.trace() * obs.pauli.phase();
  if (std::abs(std::imag(value)) > 1e-10)
    throw std::logic_error("expectation has a non-real part: " +
                           std::to_string(std::imag(value)));
  return std::real(value);
}

DenseOperator heisenberg_pullback(const DenseOperator& op,
                                  const TransitionMap& tm) {
  for (const auto& q : op.support)
    if (is_register_member(tm.sink, q))
      throw std::invalid_argument("pullback operator overlaps the sink");
  DenseRegister reg = DenseRegister::density();
  reg.load_operator(op);
  auto gates = tm.circuit.flattened();
  // In reverse order a qubit's "last use" is its first forward gate.
  std::map<QubitId, int> first_touch;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (first_touch.find(gates[i]->a) == first_touch.end())
      first_touch[gates[i]->a] = int(i);
    if (first_touch.find(gates[i]->b) == first_touch.end())
      first_touch[gates[i]->b] = int(i);
  }
  auto materialize = [&](const QubitId& q) {
    if (reg.has(q)) return;
    reg.add_qubit(q, Mat::Identity(2, 2));
  };
  for (int i = int(gates.size()) - 1; i >= 0; --i) {
    const Gate2q& g = *gates[i];
    materialize(g.a);
    materialize(g.b);
    const GateNoise* noise =
        tm.gate_noise.empty() ? nullptr : &tm.gate_noise[std::size_t(i)];
    // Dual of (noise after U) is U^dag after the (self-dual) noise block.
    if (noise != nullptr && noise->kind == GateNoise::Kind::Depolarize)
      reg.depolarize_pair(g.a, g.b, noise->p);
    if (noise != nullptr && noise->kind == GateNoise::Kind::PauliMix)
      reg.mix_with_conjugated(g.a, g.b, noise->pauli, noise->p);
    if (noise != nullptr && noise->kind == GateNoise::Kind::Coherent) {
      reg.apply_pair2(g.a, g.b, noise->u_noisy.adjoint());
    } else {
      reg.apply_pair2(g.a, g.b, g.u.adjoint());
    }
    // Once no earlier gate touches an initialized qubit, contract it with
    // its omega (the dual of appending the state).
    for (const QubitId& q : {g.a, g.b}) {
      if (!reg.has(q)) continue;
      if (!is_register_member(tm.system, q) && !is_register_member(tm.sink, q))
        continue;
      if (first_touch.at(q) == i) reg.fold(q, tm.effective_omega(q));
    }
  }
  // System/sink legs the circuit never touched: direct omega contraction.
  for (const auto& q : op.support)
    if (is_register_member(tm.system, q) && reg.has(q))
      reg.fold(q, tm.effective_omega(q));
  return reg.to_operator();
}

double deviation(const PreparationPlan& plan, const LocalObservable& obs,
                 const NoiseSpec& spec) {
  const double clean = expectation_local(plan, obs);
  const double dirty = expectation_local(with_noise(plan, spec), obs);
  return std::abs(clean - dirty);
}

namespace {

QuantumChannel channel_from_action(
    const std::vector<QubitId>& domain, const std::vector<QubitId>& codomain,
    const std::function<DenseOperator(const DenseOperator&)>& act) {
  const std::size_t dd = std::size_t(1) << domain.size();
  const std::size_t dc = std::size_t(1) << codomain.size();
  Mat choi = Mat::Zero(dd * dc, dd * dc);
  for (std::size_t a = 0; a < dd; ++a)
    for (std::size_t b = 0; b < dd; ++b) {
      Mat unit = Mat::Zero(dd, dd);
      unit(a, b) = 1.0;
      DenseOperator img = permuted(act(DenseOperator(domain, unit)), codomain);
      for (std::size_t i = 0; i < dc; ++i)
        for (std::size_t j = 0; j < dc; ++j)
          choi(a + dd * i, b + dd * j) = img.mat(i, j);
    }
  Eigen::SelfAdjointEigenSolver<Mat> es(choi);
  std::vector<Mat> kraus;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double lam = es.eigenvalues()[k];
    if (lam < 1e-14) continue;
    Mat kk(dc, dd);
    for (std::size_t i = 0; i < dc; ++i)
      for (std::size_t a = 0; a < dd; ++a)
        kk(i, a) = std::sqrt(lam) * es.eigenvectors()(a + dd * i, k);
    kraus.push_back(std::move(kk));
  }
  return QuantumChannel(std::move(kraus), domain, codomain);
}

DenseOperator run_transition_on(const TransitionMap& tm,
                                const DenseOperator& input, bool keep_system) {
  DenseRegister reg = DenseRegister::density();
  reg.load_operator(input);
  apply_transition(reg, tm);
  if (!keep_system)
    for (const auto& q : tm.system) reg.trace_out(q);
  return reg.to_operator();
}

}  // namespace

QuantumChannel transition_channel(const TransitionMap& tm) {
  std::vector<QubitId> cod = tm.bath;
  for (const auto& q : tm.system) cod.push_back(q);
  return channel_from_action(tm.bath, cod, [&](const DenseOperator& x) {
    return run_transition_on(tm, x, /*keep_system=*/true);
  });
}

QuantumChannel bath_channel(const TransitionMap& tm) {
  return channel_from_action(tm.bath, tm.bath, [&](const DenseOperator& x) {
    return run_transition_on(tm, x, /*keep_system=*/false);
  });
}

std::set<QubitId> numerical_support(const DenseOperator& op, double tol) {
  std::set<QubitId> out;
  for (const auto& q : op.support) {
    for (char letter : {'X', 'Z'}) {
      DenseOperator p(std::vector<QubitId>{q}, pauli_mat(letter));
      DenseOperator pe = embed(p, op.support);
      const Mat comm = pe.mat * op.mat - op.mat * pe.mat;
      if (comm.cwiseAbs().maxCoeff() > tol) {
        out.insert(q);
        break;
      }
    }
  }
  return out;
}

}  // namespace hqs
