#include "hqs/monte_carlo.hpp"

#include <atomic>
#include <thread>

namespace hqs {

MonteCarloResult monte_carlo_pauli_noise(
    const std::vector<ParsedTransition>& blocks, int lx, int ly, double gate_p,
    double state_q, const PauliString& observable, std::size_t shots,
    std::uint64_t seed, int jobs) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  jobs = std::max(1, jobs);
  std::vector<double> sum(jobs, 0.0), sum2(jobs, 0.0);
  auto worker = [&](int w) {
    StabilizerRunner runner(lx, ly, blocks, 0);
    for (std::size_t shot = w; shot < shots; shot += std::size_t(jobs)) {
      StabilizerRunner shot_runner(lx, ly, blocks,
                                   seed * 0x9e3779b97f4a7c15ULL + shot);
      shot_runner.run({gate_p, state_q});
      const double x = double(shot_runner.expectation(observable));
      sum[w] += x;
      sum2[w] += x * x;
    }
  };
  std::vector<std::thread> threads;
  for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
  for (auto& t : threads) t.join();
  double s = 0.0, s2 = 0.0;
  for (int w = 0; w < jobs; ++w) {
    s += sum[w];
    s2 += sum2[w];
  }
  MonteCarloResult out;
  out.shots = shots;
  out.mean = s / double(shots);
  const double var =
      std::max(0.0, s2 / double(shots) - out.mean * out.mean);
  out.stderr_of_mean = std::sqrt(var / double(shots));
  return out;
}

}  // namespace hqs
