#include "hqs/circuit_text.hpp"

#include <iomanip>
#include <sstream>

namespace hqs {
namespace {

std::string state_label(const Mat& m) {
  if ((m - ket0_dm()).cwiseAbs().maxCoeff() < 1e-14) return "Z+";
  if ((m - ket1_dm()).cwiseAbs().maxCoeff() < 1e-14) return "Z-";
  if ((m - ketplus_dm()).cwiseAbs().maxCoeff() < 1e-14) return "X+";
  Mat xm(2, 2);
  xm << 0.5, -0.5, -0.5, 0.5;
  if ((m - xm).cwiseAbs().maxCoeff() < 1e-14) return "X-";
  std::ostringstream os;
  os << "M";
  os << std::setprecision(17);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      os << " " << std::real(m(i, j)) << " " << std::imag(m(i, j));
  return os.str();
}

Mat state_from_label(const std::string& label, std::istringstream& rest) {
  if (label == "Z+") return ket0_dm();
  if (label == "Z-") return ket1_dm();
  if (label == "X+") return ketplus_dm();
  if (label == "X-") {
    Mat m(2, 2);
    m << 0.5, -0.5, -0.5, 0.5;
    return m;
  }
  if (label == "M") {
    Mat m(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double re, im;
        rest >> re >> im;
        m(i, j) = cplx(re, im);
      }
    return m;
  }
  throw std::invalid_argument("bad prep state: " + label);
}

}  // namespace

std::string export_circuit_text(const TransitionMap& tm, int ly,
                                const std::string& model) {
  std::ostringstream os;
  os << "# hqs circuit v1\n";
  os << "model " << model << "\n";
  os << "lx " << tm.lx << "\n";
  os << "ly " << ly << "\n";
  os << "row " << tm.row << "\n";
  auto reg_line = [&](const char* name, const std::vector<QubitId>& qs) {
    os << name;
    for (const auto& q : qs) os << " " << to_string(q);
    os << "\n";
  };
  reg_line("bath", tm.bath);
  reg_line("system", tm.system);
  reg_line("sink", tm.sink);
  for (const auto& [q, m] : tm.omega_system)
    os << "prep " << to_string(q) << " " << state_label(m) << "\n";
  for (const auto& [q, m] : tm.omega_sink)
    os << "prep " << to_string(q) << " " << state_label(m) << "\n";
  int layer = 0;
  for (const auto& lay : tm.circuit.layers()) {
    for (const auto& g : lay) {
      os << "gate " << layer << " " << g.name << " " << to_string(g.a) << " "
         << to_string(g.b);
      if (g.name == "U4") {
        os << std::setprecision(17);
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            os << " " << std::real(g.u(i, j)) << " " << std::imag(g.u(i, j));
      }
      os << "\n";
    }
    ++layer;
  }
  return os.str();
}

ParsedTransition parse_circuit_text(const std::string& text) {
  ParsedTransition out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "model") {
      ls >> out.model;
    } else if (key == "lx") {
      ls >> out.lx;
    } else if (key == "ly") {
      ls >> out.ly;
    } else if (key == "row") {
      ls >> out.row;
    } else if (key == "bath" || key == "system" || key == "sink") {
      std::string name;
      auto& target = key == "bath" ? out.bath
                     : key == "system" ? out.system
                                       : out.sink;
      while (ls >> name) target.push_back(parse_qubit(name));
    } else if (key == "prep") {
      std::string qname, label;
      ls >> qname >> label;
      out.preps.emplace(parse_qubit(qname), state_from_label(label, ls));
    } else if (key == "gate") {
      ParsedGate g;
      std::string qa, qb;
      ls >> g.layer >> g.name >> qa >> qb;
      g.a = parse_qubit(qa);
      g.b = parse_qubit(qb);
      if (g.name == "U4") {
        g.u = Mat(4, 4);
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) {
            double re, im;
            ls >> re >> im;
            g.u(i, j) = cplx(re, im);
          }
      } else {
        g.u = named_gate_matrix(g.name);
      }
      out.gates.push_back(std::move(g));
    } else {
      throw std::invalid_argument("bad circuit line: " + line);
    }
  }
  return out;
}

std::vector<ParsedTransition> parse_circuit_blocks(const std::string& text) {
  std::vector<ParsedTransition> out;
  const std::string marker = "# hqs circuit v1";
  std::size_t pos = text.find(marker);
  while (pos != std::string::npos) {
    std::size_t next = text.find(marker, pos + marker.size());
    out.push_back(parse_circuit_text(
        text.substr(pos, next == std::string::npos ? next : next - pos)));
    pos = next;
  }
  return out;
}

TransitionMap transition_from_parsed(const ParsedTransition& p) {
  std::vector<std::vector<Gate2q>> layers;
  int current = -1;
  for (const auto& g : p.gates) {
    if (g.layer != current) {
      layers.emplace_back();
      current = g.layer;
    }
    layers.back().push_back(Gate2q{g.name, g.a, g.b, g.u});
  }
  std::map<QubitId, Mat> omega_system, omega_sink;
  for (const auto& q : p.system) omega_system.emplace(q, p.preps.at(q));
  for (const auto& q : p.sink) omega_sink.emplace(q, p.preps.at(q));
  RegisterPartition part{p.bath, p.system, p.sink};
  return build_transition_map(LayeredCircuit(std::move(layers)),
                              std::move(omega_system), std::move(omega_sink),
                              std::move(part), p.row, p.lx);
}

}  // namespace hqs
