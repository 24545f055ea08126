#include "hqs/mixing_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hqs {
namespace {

constexpr double kFloor = 1e-14;

}  // namespace

MixingReport fit_mixing(const std::vector<EtaRecord>& series, int ell0) {
  if (series.empty()) throw std::invalid_argument("empty eta series");
  MixingReport report;
  report.eta_values = series;
  report.ell0 = ell0;

  double max_eta = 0.0;
  for (const auto& r : series) max_eta = std::max(max_eta, r.upper);
  if (max_eta <= 1e-12) {
    report.exact_mixing = true;
    report.classified = true;
    report.delta = 0.0;
    report.gamma = std::numeric_limits<double>::infinity();
    return report;
  }

  // Plateau estimate: median upper of the last quartile in elapsed time.
  std::vector<EtaRecord> sorted = series;
  std::sort(sorted.begin(), sorted.end(),
            [](const EtaRecord& a, const EtaRecord& b) {
              return a.elapsed < b.elapsed;
            });
  const std::size_t q = std::max<std::size_t>(1, sorted.size() / 4);
  std::vector<double> tail;
  for (std::size_t i = sorted.size() - q; i < sorted.size(); ++i)
    tail.push_back(sorted[i].upper);
  std::sort(tail.begin(), tail.end());
  report.delta = tail[tail.size() / 2];

  // Regression of log(eta - delta) on log(ell) and elapsed time.
  std::vector<double> ys;
  std::vector<std::array<double, 3>> xs;  // 1, log ell, -elapsed
  bool multiple_ells = false;
  for (const auto& r : series) {
    const double y = r.upper - report.delta;
    if (y <= kFloor) continue;
    ys.push_back(std::log(y));
    xs.push_back({1.0, std::log(double(r.ell)), -double(r.elapsed)});
    if (r.ell != series.front().ell) multiple_ells = true;
  }
  if (ys.size() < 2) {
    // Pure plateau: nothing constrains the decay rate.
    report.gamma_unconstrained = true;
    report.c = 0.0;
    report.classified = true;
    for (const auto& r : series)
      if (r.upper > report.delta * 1.5 + 1e-12) report.classified = false;
    return report;
  }
  const int cols = multiple_ells ? 3 : 2;  // drop the ell column when degenerate
  Eigen::MatrixXd a(ys.size(), cols);
  Eigen::VectorXd b(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    a(i, 0) = xs[i][0];
    if (multiple_ells) {
      a(i, 1) = xs[i][1];
      a(i, 2) = xs[i][2];
    } else {
      a(i, 1) = xs[i][2];
    }
    b(i) = ys[i];
  }
  Eigen::VectorXd sol = a.colPivHouseholderQr().solve(b);
  report.c = std::exp(sol(0));
  report.alpha = multiple_ells ? sol(1) : 0.0;
  report.gamma = multiple_ells ? sol(2) : sol(1);
  report.fit_residual = (a * sol - b).norm();
  report.classified = true;
  for (const auto& r : series) {
    if (r.ell > ell0) continue;
    const double model = report.c * std::pow(double(r.ell), report.alpha) *
                             std::exp(-report.gamma * double(r.elapsed)) +
                         report.delta;
    if (r.upper > 1.5 * model + 1e-12) report.classified = false;
  }
  return report;
}

double predicted_bound(double epsilon, int ell_y, double delta, double c_const,
                       double norm_o) {
  if (epsilon < 0.0 || epsilon >= 1.0)
    throw std::invalid_argument("epsilon must lie in [0, 1)");
  double term = 0.0;
  if (epsilon > 0.0) {
    const double l = std::log(1.0 / epsilon);
    term = epsilon * l * l;
  }
  return c_const * (term + double(ell_y) * delta) * norm_o;
}

std::string serialize_mixing_report(const MixingReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "# hqs mixing report v1\n";
  os << "delta = " << r.delta << "\n";
  os << "c = " << r.c << "\n";
  os << "alpha = " << r.alpha << "\n";
  if (std::isinf(r.gamma)) os << "gamma = inf\n";
  else os << "gamma = " << r.gamma << "\n";
  os << "gamma_unconstrained = " << (r.gamma_unconstrained ? "true" : "false")
     << "\n";
  os << "exact_mixing = " << (r.exact_mixing ? "true" : "false") << "\n";
  os << "ell0 = " << r.ell0 << "\n";
  os << "classified = " << (r.classified ? "true" : "false") << "\n";
  os << "fit_residual = " << r.fit_residual << "\n";
  os << "csv:\n";
  os << "ell,elapsed,lower,upper\n";
  for (const auto& e : r.eta_values)
    os << e.ell << "," << e.elapsed << "," << e.lower << "," << e.upper
       << "\n";
  return os.str();
}

MixingReport parse_mixing_report(const std::string& text) {
  MixingReport r;
  std::istringstream is(text);
  std::string line;
  bool in_csv = false;
  bool csv_header = true;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line == "csv:") {
      in_csv = true;
      continue;
    }
    if (!in_csv) {
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(0, eq);
      std::string val = line.substr(eq + 1);
      auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(' ');
        const auto b = s.find_last_not_of(' ');
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
      };
      key = trim(key);
      val = trim(val);
      if (key == "delta") r.delta = std::stod(val);
      else if (key == "c") r.c = std::stod(val);
      else if (key == "alpha") r.alpha = std::stod(val);
      else if (key == "gamma")
        r.gamma = val == "inf" ? std::numeric_limits<double>::infinity()
                               : std::stod(val);
      else if (key == "gamma_unconstrained") r.gamma_unconstrained = val == "true";
      else if (key == "exact_mixing") r.exact_mixing = val == "true";
      else if (key == "ell0") r.ell0 = std::stoi(val);
      else if (key == "classified") r.classified = val == "true";
      else if (key == "fit_residual") r.fit_residual = std::stod(val);
    } else {
      if (csv_header) {
        csv_header = false;
        continue;
      }
      EtaRecord e;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream ls(line);
      ls >> e.ell >> e.elapsed >> e.lower >> e.upper;
      r.eta_values.push_back(e);
    }
  }
  return r;
}

}  // namespace hqs
