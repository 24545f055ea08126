#include "hqs/lemma_checks.hpp"

#include <random>
#include <sstream>

namespace hqs {
namespace {

Mat random_matrix(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

Mat random_unitary(int dim, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Mat> qr(random_matrix(dim, rng));
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    cplx d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

Mat random_state(int dim, std::mt19937_64& rng) {
  Mat a = random_matrix(dim, rng);
  Mat rho = a * a.adjoint();
  rho /= rho.trace();
  return rho;
}

DenseOperator random_operator(const std::vector<QubitId>& support,
                              std::mt19937_64& rng) {
  return DenseOperator(support,
                       random_matrix(1 << int(support.size()), rng));
}

TransitionMap random_shallow_transition(int lx, int depth,
                                        std::mt19937_64& rng) {
  // Gates drawn along the device ladder edges at row 1.
  const int t = 1;
  EdgeSet adjacency;
  std::vector<std::pair<QubitId, QubitId>> edges;
  for (int c = 0; c < lx; ++c) {
    if (c + 1 < lx) edges.emplace_back(QubitId::bath(c), QubitId::bath(c + 1));
    edges.emplace_back(QubitId::bath(c), QubitId::system(t, c));
    edges.emplace_back(QubitId::bath(c), QubitId::sink(t, c));
  }
  for (auto& [a, b] : edges) add_edge(adjacency, a, b);
  CircuitBuilder builder(adjacency);
  for (int layer = 0; layer < depth; ++layer) {
    auto [a, b] = edges[rng() % edges.size()];
    builder.push_layer(make_u4(a, b, random_unitary(4, rng)));
  }
  RegisterPartition part;
  part.bath = bath_row(lx);
  part.system = system_row(t, lx);
  part.sink = sink_row(t, lx);
  std::map<QubitId, Mat> omega_system, omega_sink;
  for (const auto& q : part.system) omega_system.emplace(q, random_state(2, rng));
  for (const auto& q : part.sink) omega_sink.emplace(q, random_state(2, rng));
  return build_transition_map(builder.finish(), std::move(omega_system),
                              std::move(omega_sink), std::move(part), t, lx);
}

}  // namespace

std::vector<BatteryResult> duality_battery(std::uint64_t seed,
                                           int trials_per_family) {
  std::mt19937_64 rng(seed);
  std::vector<BatteryResult> out;

  auto run_family = [&](const std::string& name,
                        const std::function<QuantumChannel()>& make) {
    BatteryResult res;
    res.name = "duality/" + name;
    res.bound = 1e-10;
    res.trials = trials_per_family;
    for (int trial = 0; trial < trials_per_family; ++trial) {
      QuantumChannel ch = make();
      QuantumChannel dual = dual_channel(ch);
      DenseOperator rho(ch.domain, random_state(1 << int(ch.domain.size()), rng));
      DenseOperator obs = random_operator(ch.codomain, rng);
      const cplx lhs = hs_inner(DenseOperator(obs.support, obs.mat.adjoint()),
                                apply_channel_op(ch, rho));
      const cplx rhs = hs_inner(
          DenseOperator(rho.support, rho.mat.adjoint()), apply_dual(dual, obs));
      res.worst = std::max(res.worst, std::abs(lhs - rhs));
    }
    res.pass = res.worst <= res.bound;
    out.push_back(res);
  };

  const QubitId a = QubitId::bath(0), b = QubitId::bath(1);
  run_family("unitary", [&] {
    return QuantumChannel::unitary(random_unitary(4, rng), {a, b});
  });
  run_family("append-state", [&] {
    return QuantumChannel::append_state(
        DensityMatrix({QubitId::system(1, 0)}, random_state(2, rng)), {a, b});
  });
  run_family("trace-out", [&] {
    return QuantumChannel::trace_out({a, b, QubitId::sink(1, 0)},
                                     {QubitId::sink(1, 0)});
  });
  run_family("depolarizing", [&] { return depolarizing_projector({a, b}); });
  run_family("transition", [&] {
    return transition_channel(random_shallow_transition(1, 2, rng));
  });
  run_family("noisy-transition", [&] {
    NoiseSpec spec;
    spec.epsilon = 0.05;
    spec.seed = rng();
    spec.gate_family = GateNoiseFamily::DepolarizeAfterGate;
    return transition_channel(
        apply_noise(random_shallow_transition(1, 2, rng), spec));
  });
  return out;
}

BatteryResult norm_nonincreasing_battery(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  BatteryResult res;
  res.name = "heisenberg-norm-nonincreasing";
  res.bound = 1e-10;
  res.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    TransitionMap tm = random_shallow_transition(1 + int(rng() % 2), 2, rng);
    QuantumChannel dual = dual_channel(transition_channel(tm));
    DenseOperator obs = random_operator(dual.domain, rng);
    const double before = operator_norm(obs);
    const double after = operator_norm(apply_dual(dual, obs));
    res.worst = std::max(res.worst, after - before);
  }
  res.pass = res.worst <= res.bound;
  return res;
}

BatteryResult lemma1_battery(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  BatteryResult res;
  res.name = "lemma1-bath-product-perturbation";
  res.trials = trials;
  res.bound = 1e-10;  // slack above eps ||O|| |Supp O|
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < trials; ++trial) {
    const int n = 2 + int(rng() % 2);
    std::vector<QubitId> qs = bath_row(n);
    const double eps = std::pow(10.0, -1.0 - 2.0 * unit(rng));
    Mat rho = Mat::Ones(1, 1), tilde = Mat::Ones(1, 1);
    double eps_actual = 0.0;
    for (int i = 0; i < n; ++i) {
      Mat ri = random_state(2, rng);
      Mat si = random_state(2, rng);
      Mat ti = (1.0 - eps / 2.0) * ri + (eps / 2.0) * si;
      eps_actual = std::max(eps_actual, trace_norm(Mat(ti - ri)));
      rho = kron_le(rho, ri);
      tilde = kron_le(tilde, ti);
    }
    DenseOperator obs = random_operator(qs, rng);
    const double lhs = std::abs(((rho - tilde) * obs.mat).trace());
    const double rhs = eps_actual * operator_norm(obs) * double(n);
    res.worst = std::max(res.worst, lhs - rhs);
  }
  res.pass = res.worst <= res.bound;
  return res;
}

BatteryResult lemma2_battery(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  BatteryResult res;
  res.name = "lemma2-systemsink-product-perturbation";
  res.trials = trials;
  res.bound = 1e-10;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < trials; ++trial) {
    // O on two initialized qubits plus one spectator; the bound is on the
    // operator norm of the partial contraction.
    const QubitId s1 = QubitId::system(1, 0), s2 = QubitId::sink(1, 0);
    const QubitId ext = QubitId::bath(0);
    const std::vector<QubitId> full{s1, s2, ext};
    const double eps = std::pow(10.0, -1.0 - 2.0 * unit(rng));
    double eps_actual = 0.0;
    Mat w = Mat::Ones(1, 1), wt = Mat::Ones(1, 1);
    for (int i = 0; i < 2; ++i) {
      Mat ri = random_state(2, rng);
      Mat si = random_state(2, rng);
      Mat ti = (1.0 - eps / 2.0) * ri + (eps / 2.0) * si;
      eps_actual = std::max(eps_actual, trace_norm(Mat(ti - ri)));
      w = kron_le(w, ri);
      wt = kron_le(wt, ti);
    }
    DenseOperator obs = random_operator(full, rng);
    DenseOperator diff({s1, s2}, w - wt);
    DenseOperator contracted =
        partial_trace(multiply(embed(diff, full), obs), {ext});
    const double lhs = operator_norm(contracted);
    const double rhs = eps_actual * operator_norm(obs) * 2.0;
    res.worst = std::max(res.worst, lhs - rhs);
  }
  res.pass = res.worst <= res.bound;
  return res;
}

BatteryResult lemma4_battery(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BatteryResult res;
  res.name = "lemma4-support-containment";
  res.bound = 0.0;  // containment is exact
  int violations = 0;
  auto check_map = [&](const TransitionMap& tm, int ly) {
    auto graph =
        build_interaction_graph(tm.row, std::max(tm.lx, 2), ly,
                                DeviceLayout::Ladder);
    const int depth = tm.circuit.depth();
    for (int rep = 0; rep < 4; ++rep) {
      // Random operator on a small ball around a bath or system qubit.
      const QubitId center = rng() % 2 == 0
                                 ? QubitId::bath(int(rng() % tm.lx))
                                 : QubitId::system(tm.row, int(rng() % tm.lx));
      Ball ball = graph.ball(center, int(rng() % 2));
      std::vector<QubitId> support;
      for (const auto& q : ball.members)
        if (q.reg == Reg::Bath ||
            (q.reg == Reg::System && q.row == tm.row))
          support.push_back(q);
      if (support.empty()) continue;
      DenseOperator op = random_operator(support, rng);
      DenseOperator img = heisenberg_pullback(op, tm);
      auto actual = numerical_support(img, 1e-10);
      auto predicted = graph.grow_support(
          std::set<QubitId>(support.begin(), support.end()), depth);
      ++res.trials;
      for (const auto& q : actual)
        if (predicted.count(q) == 0) ++violations;
    }
  };
  for (int rep = 0; rep < 6; ++rep)
    check_map(random_shallow_transition(3, 1 + int(rng() % 2), rng), 2);
  for (int t : {1, 2, 3})
    check_map(surface_code_transition(3, t, 4), 4);
  res.worst = double(violations);
  res.pass = violations == 0;
  std::ostringstream os;
  os << violations << " support escapes over " << res.trials << " pullbacks";
  res.detail = os.str();
  return res;
}

BatteryResult lemma6_battery(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  BatteryResult res;
  res.name = "lemma6-noisy-pauli";
  res.trials = trials;
  res.bound = 1e-12;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const char alphabet[3] = {'X', 'Y', 'Z'};
  for (int trial = 0; trial < trials; ++trial) {
    const int n = 1 + int(rng() % 3);
    std::map<QubitId, char> letters;
    for (int i = 0; i < n; ++i)
      letters[QubitId::system(1, i)] = alphabet[rng() % 3];
    PauliString p(letters);
    NoiseSpec spec;
    spec.epsilon = 0.3 * unit(rng);
    spec.seed = rng();
    spec.meas_family = trial % 2 == 0 ? MeasNoiseFamily::Shrink
                                      : MeasNoiseFamily::RotateAxis;
    DenseOperator noisy = noisy_pauli(p, spec);
    DenseOperator clean = p.to_dense(noisy.support);
    const double dist = operator_norm(add(clean, noisy, 1.0, -1.0));
    res.worst = std::max(res.worst, dist - double(n) * spec.epsilon);
    if (operator_norm(noisy) > 1.0 + 1e-12)
      res.worst = std::max(res.worst, operator_norm(noisy) - 1.0);
  }
  res.pass = res.worst <= res.bound;
  return res;
}

Lemma5Result lemma5_scaling(std::uint64_t seed,
                            const std::vector<double>& eps_grid) {
  std::mt19937_64 rng(seed);
  Lemma5Result out;
  const TransitionMap tm = surface_code_transition(3, 2, 5);
  const int depth = tm.circuit.depth();
  // Sample of local observables on the transition's codomain.
  std::vector<DenseOperator> sample;
  for (int rep = 0; rep < 6; ++rep) {
    std::vector<QubitId> support;
    if (rep % 2 == 0) {
      support = {QubitId::bath(int(rng() % 3))};
    } else {
      support = {QubitId::bath(int(rng() % 2)),
                 QubitId::system(2, int(rng() % 3))};
    }
    sample.push_back(random_operator(support, rng));
  }
  for (double eps : eps_grid) {
    NoiseSpec spec;
    spec.epsilon = eps;
    spec.seed = 7;
    TransitionMap noisy = apply_noise(tm, spec);
    double k = 0.0;
    for (const auto& op : sample) {
      DenseOperator clean = heisenberg_pullback(op, tm);
      DenseOperator dirty = heisenberg_pullback(op, noisy);
      const double diff = operator_norm(add(clean, dirty, 1.0, -1.0));
      const double r = 1.0;
      const double denom =
          eps * operator_norm(op) * (r + depth) * (r + depth);
      k = std::max(k, diff / denom);
    }
    out.k_of_eps.emplace_back(eps, k);
  }
  out.k_min = out.k_of_eps.front().second;
  out.k_max = out.k_of_eps.front().second;
  for (auto& [e, k] : out.k_of_eps) {
    out.k_min = std::min(out.k_min, k);
    out.k_max = std::max(out.k_max, k);
  }
  out.stable_within_factor_two = out.k_max <= 2.0 * out.k_min;
  return out;
}

double heisenberg_expectation(const PreparationPlan& plan,
                              const LocalObservable& obs) {
  DenseOperator op = obs.pauli.to_dense();
  for (int t = obs.last_row; t >= 1; --t)
    op = heisenberg_pullback(op, plan.transition(t));
  // Contract with the initial bath product state.
  NoiseStream stream(plan.noise ? plan.noise->seed : 0, 0x62617468ULL);
  Mat rho = Mat::Ones(1, 1);
  std::vector<QubitId> order;
  for (const auto& [q, m] : plan.rho_bath_init) {
    Mat state = plan.noise ? noisy_state_factor(m, *plan.noise, stream) : m;
    rho = kron_le(rho, state);
    order.push_back(q);
  }
  DenseOperator embedded = embed(op, order);
  const cplx expect = (rho * embedded.mat).trace();
  if (std::abs(std::imag(expect)) > 1e-9)
    throw std::logic_error("heisenberg expectation not real");
  return std::real(expect);
}

BatteryResult picture_independence_battery() {
  BatteryResult res;
  res.name = "picture-independence";
  res.bound = 1e-10;
  auto check = [&](const PreparationPlan& plan, const PauliString& p) {
    auto obs = make_local_observable(plan, p);
    const double s = expectation_local(plan, obs);
    const double h = heisenberg_expectation(plan, obs);
    res.worst = std::max(res.worst, std::abs(s - h));
    ++res.trials;
  };
  auto surface = surface_code_plan(3, 3);
  for (const auto& g : surface_code_generators(3, 3))
    check(surface, stabilizer_pauli(g));
  check(surface, logical_z_row(3, 2));
  auto trivial = trivial_plan(2, 3);
  check(trivial, PauliString({{QubitId::system(2, 0), 'Z'}}));
  check(trivial, PauliString({{QubitId::system(1, 0), 'X'}}));
  res.pass = res.worst <= res.bound;
  return res;
}

}  // namespace hqs
