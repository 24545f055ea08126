#include "hqs/plan.hpp"

namespace hqs {
namespace {

std::map<QubitId, Mat> zero_bath(int lx) {
  std::map<QubitId, Mat> out;
  for (int c = 0; c < lx; ++c) out.emplace(QubitId::bath(c), ket0_dm());
  return out;
}

}  // namespace

PreparationPlan surface_code_plan(int lx, int ly) {
  PreparationPlan plan;
  plan.model = "surface-code";
  plan.lx = lx;
  plan.ly = ly;
  for (int t = 1; t <= ly; ++t)
    plan.transitions.push_back(surface_code_transition(lx, t, ly));
  plan.rho_bath_init = zero_bath(lx);
  return plan;
}

PreparationPlan trivial_plan(int lx, int ly) {
  PreparationPlan plan;
  plan.model = "trivial";
  plan.lx = lx;
  plan.ly = ly;
  for (int t = 1; t <= ly; ++t)
    plan.transitions.push_back(trivial_zero_transition(lx, t));
  plan.rho_bath_init = zero_bath(lx);
  return plan;
}

PreparationPlan trivial_no_swap_plan(int lx, int ly) {
  PreparationPlan plan;
  plan.model = "trivial-noswap";
  plan.lx = lx;
  plan.ly = ly;
  for (int t = 1; t <= ly; ++t)
    plan.transitions.push_back(trivial_no_swap_transition(lx, t));
  plan.rho_bath_init = zero_bath(lx);
  return plan;
}

PreparationPlan with_noise(const PreparationPlan& plan, const NoiseSpec& spec) {
  PreparationPlan out = plan;
  out.noise = spec;
  for (auto& tm : out.transitions) tm = apply_noise(tm, spec);
  return out;
}

LocalObservable make_local_observable(const PreparationPlan& plan,
                                      const PauliString& pauli) {
  LocalObservable obs;
  obs.pauli = pauli;
  if (pauli.letters.empty()) {
    obs.first_row = obs.last_row = 1;
    obs.radius = 0;
    return obs;
  }
  int lo = plan.ly, hi = 1;
  for (const auto& [q, c] : pauli.letters) {
    if (q.reg != Reg::System)
      throw std::invalid_argument("observable sites must be lattice sites");
    if (q.row < 1 || q.row > plan.ly || q.col < 0 || q.col >= plan.lx)
      throw std::invalid_argument("observable site outside the lattice");
    lo = std::min(lo, int(q.row));
    hi = std::max(hi, int(q.row));
  }
  obs.first_row = lo;
  obs.last_row = hi;
  // Bounding ball in the lattice metric (smallest radius over support
  // centers), taken on the full interaction graph at the final time.
  auto g = build_interaction_graph(plan.ly, plan.lx, plan.ly,
                                   DeviceLayout::Ladder);
  int best = plan.lx * plan.ly + plan.ly;
  QubitId best_center = pauli.letters.begin()->first;
  for (const auto& [center, c0] : pauli.letters) {
    int worst = 0;
    for (const auto& [q, c1] : pauli.letters) {
      auto d = g.distance(center, q);
      worst = std::max(worst, d.value_or(best));
    }
    if (worst < best) {
      best = worst;
      best_center = center;
    }
  }
  obs.radius = best;
  obs.bounding_ball = g.ball(best_center, best);
  return obs;
}

}  // namespace hqs
