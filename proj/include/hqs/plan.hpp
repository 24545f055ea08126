#pragma once

#include "hqs/interaction_graph.hpp"
#include "hqs/surface_code.hpp"
#include "hqs/trivial_model.hpp"

namespace hqs {

// The full preparation pipeline: one transition map per row plus the initial
// product state of the bath. When `noise` is set, evaluations run the
// noisy counterparts built gate-by-gate from the same circuits.
struct PreparationPlan {
  std::string model;  // "surface-code", "trivial", "trivial-noswap"
  int lx{1};
  int ly{1};
  std::vector<TransitionMap> transitions;  // index t-1 holds row t
  std::map<QubitId, Mat> rho_bath_init;
  std::optional<NoiseSpec> noise;

  const TransitionMap& transition(int t) const { return transitions.at(t - 1); }
};

PreparationPlan surface_code_plan(int lx, int ly);
PreparationPlan trivial_plan(int lx, int ly);          // all-|0> rows
PreparationPlan trivial_no_swap_plan(int lx, int ly);  // mixing control
PreparationPlan with_noise(const PreparationPlan& plan, const NoiseSpec& spec);

// A Pauli observable on 2D sites together with its Lemma-7 window: rows
// [t0+1, t0+2r] with t0 = first support row - 1 and r the bounding-ball
// radius in the simulated-lattice metric.
struct LocalObservable {
  PauliString pauli;
  int first_row{1};
  int last_row{1};
  int radius{0};
  Ball bounding_ball;
};

LocalObservable make_local_observable(const PreparationPlan& plan,
                                      const PauliString& pauli);

}  // namespace hqs
