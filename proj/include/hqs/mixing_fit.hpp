#pragma once

#include <string>
#include <vector>

#include "hqs/bath_superoperator.hpp"

namespace hqs {

struct EtaRecord {
  int ell{1};
  int elapsed{1};  // window length t1 - t0 + 1
  double lower{0.0};
  double upper{0.0};
};

// Fitted c * ell^alpha * exp(-gamma t) + delta against the certified upper
// values. delta is the large-time plateau (median of the last quartile);
// all-zero series short-circuit to the exact-mixing flag with gamma = inf.
struct MixingReport {
  std::vector<EtaRecord> eta_values;
  double c{0.0};
  double alpha{0.0};
  double gamma{0.0};
  bool gamma_unconstrained{false};
  bool exact_mixing{false};
  double delta{0.0};
  int ell0{0};
  bool classified{false};
  double fit_residual{0.0};
};

MixingReport fit_mixing(const std::vector<EtaRecord>& series, int ell0);

// C * (eps log^2(1/eps) + ly * delta) * norm_o; eps = 0 contributes exactly
// nothing through the first term.
double predicted_bound(double epsilon, int ell_y, double delta, double c_const,
                       double norm_o);

std::string serialize_mixing_report(const MixingReport& report);
MixingReport parse_mixing_report(const std::string& text);

}  // namespace hqs
