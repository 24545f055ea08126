#pragma once

#include "hqs/plan.hpp"

namespace hqs {

// Randomized invariant batteries shared by the unit tests, the verify CLI
// subcommand, and the acceptance suite. Each returns the worst observed
// slack so callers can pin their own thresholds.

struct BatteryResult {
  std::string name;
  int trials{0};
  double worst{0.0};   // worst |lhs| or worst lhs-rhs slack, battery-specific
  double bound{0.0};   // the asserted threshold
  bool pass{false};
  std::string detail;
};

// |Tr[T(rho)O] - Tr[rho T*(O)]| over randomized triples, per channel family.
std::vector<BatteryResult> duality_battery(std::uint64_t seed,
                                           int trials_per_family);

// Heisenberg contraction: ||T*(O)|| <= ||O|| on random channels/operators.
BatteryResult norm_nonincreasing_battery(std::uint64_t seed, int trials);

// Lemma 1: |Tr[(rho - rho~)O]| <= eps ||O|| |Supp O| for product
// perturbations of the bath state.
BatteryResult lemma1_battery(std::uint64_t seed, int trials);
// Lemma 2: the sup-norm variant over system/sink products.
BatteryResult lemma2_battery(std::uint64_t seed, int trials);
// Lemma 4: numerical pullback support inside grow_support(S, D) over the
// transition corpus (shallow random maps and the surface rows).
BatteryResult lemma4_battery(std::uint64_t seed);
// Lemma 6: ||O - O~|| <= n eps across measurement-noise families.
BatteryResult lemma6_battery(std::uint64_t seed, int trials);

// Lemma 5: K(eps) = max ||T*(O) - T~*(O)|| / (eps ||O|| (r+D)^2) over a
// sample; stability of K across the epsilon grid is the assertion.
struct Lemma5Result {
  std::vector<std::pair<double, double>> k_of_eps;
  double k_min{0.0}, k_max{0.0};
  bool stable_within_factor_two{false};
};
Lemma5Result lemma5_scaling(std::uint64_t seed,
                            const std::vector<double>& eps_grid);

// Windowed Schroedinger vs full Heisenberg evaluation on small instances.
BatteryResult picture_independence_battery();

// Heisenberg-side expectation used by the picture check and oracles:
// Tr[rho^B T*_{[1,last]}(O)].
double heisenberg_expectation(const PreparationPlan& plan,
                              const LocalObservable& obs);

}  // namespace hqs
