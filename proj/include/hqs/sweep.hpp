#pragma once

#include "hqs/config.hpp"
#include "hqs/lemma_checks.hpp"
#include "hqs/mixing_fit.hpp"

namespace hqs {

struct ExperimentConfig {
  std::string model{"surface-code"};
  int lx{3};
  int ly{4};
  PauliString observable;
  double eps_min{1e-4};
  double eps_max{1e-1};
  int eps_points{12};
  bool eps_log{true};
  std::vector<std::uint64_t> seeds{1};
  GateNoiseFamily gate_family{GateNoiseFamily::DepolarizeAfterGate};
  StateNoiseFamily state_family{StateNoiseFamily::MixWithMaximallyMixed};
  MeasNoiseFamily meas_family{MeasNoiseFamily::Shrink};
  bool on_gates{true}, on_states{true}, on_meas{true};
  double delta{0.0};  // plateau term in the bound column
  std::string out{"sweep.csv"};
  int jobs{2};

  static ExperimentConfig from_kv(const KvConfig& kv);
  std::vector<std::pair<std::string, std::string>> echo() const;
  NoiseSpec noise_at(double epsilon, std::uint64_t seed) const;
  std::vector<double> epsilon_grid() const;
};

PreparationPlan build_plan(const std::string& model, int lx, int ly);

struct SweepRow {
  double epsilon{0.0};
  int lx{0}, ly{0};
  std::uint64_t seed{0};
  std::string observable;
  double noiseless{0.0};
  double noisy{0.0};
  double deviation{0.0};
  double bound{0.0};
};

struct SweepResult {
  ExperimentConfig config;
  std::vector<SweepRow> rows;
};

SweepResult run_sweep(const ExperimentConfig& config);
// Byte-stable CSV; the timestamp line is the only run-dependent content.
std::string sweep_csv(const SweepResult& result, bool with_timestamp = true);

struct BoundFit {
  double c_fitted{0.0};
  double slope{0.0};
  bool all_zero{false};
  std::size_t points_used{0};
};
BoundFit fit_bound(const std::vector<SweepRow>& rows);

struct SizeIndependenceResult {
  std::vector<std::pair<int, double>> deviations;  // (ly, deviation)
  double mean{0.0};
  double spread{0.0};  // max - min
  double rel_spread{0.0};
};
SizeIndependenceResult size_independence(const ExperimentConfig& config,
                                         const std::vector<int>& ly_list,
                                         double epsilon);

}  // namespace hqs
