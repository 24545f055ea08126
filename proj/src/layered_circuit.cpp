#include "hqs/layered_circuit.hpp"

namespace hqs {

Mat gate_matrix_cnot() {
  // basis index = control + 2*target
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = 1;
  m(3, 1) = 1;
  m(2, 2) = 1;
  m(1, 3) = 1;
  return m;
}

Mat gate_matrix_swap() {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = 1;
  m(2, 1) = 1;
  m(1, 2) = 1;
  m(3, 3) = 1;
  return m;
}

Mat named_gate_matrix(const std::string& name) {
  if (name == "CNOT") return gate_matrix_cnot();
  if (name == "SWAP") return gate_matrix_swap();
  if (name == "H") {
    Mat h(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return kron_le(h, Mat::Identity(2, 2));
  }
  if (name == "S") {
    Mat s(2, 2);
    s << 1, 0, 0, cplx(0, 1);
    return kron_le(s, Mat::Identity(2, 2));
  }
  throw std::invalid_argument("unknown gate name: " + name);
}

Gate2q make_gate(const std::string& name, QubitId a, QubitId b) {
  return Gate2q{name, a, b, named_gate_matrix(name)};
}

Gate2q make_u4(QubitId a, QubitId b, const Mat& u) {
  return Gate2q{"U4", a, b, u};
}

EdgeSet& add_edge(EdgeSet& es, const QubitId& a, const QubitId& b) {
  es.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  return es;
}

bool has_edge(const EdgeSet& es, const QubitId& a, const QubitId& b) {
  return es.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) > 0;
}

LayeredCircuit::LayeredCircuit(std::vector<std::vector<Gate2q>> layers,
                               const EdgeSet* adjacency)
    : layers_(std::move(layers)) {
  for (const auto& layer : layers_) {
    std::set<QubitId> seen;
    for (const auto& g : layer) {
      if (g.a == g.b) throw std::invalid_argument("gate with repeated qubit");
      if (!seen.insert(g.a).second || !seen.insert(g.b).second)
        throw std::invalid_argument("layer has overlapping gate supports");
      const double defect =
          ((g.u.adjoint() * g.u) - Mat::Identity(4, 4)).cwiseAbs().maxCoeff();
      if (defect > 1e-12)
        throw std::invalid_argument("gate matrix is not unitary");
      if (adjacency != nullptr && !has_edge(*adjacency, g.a, g.b))
        throw std::invalid_argument("gate on non-adjacent qubits: " +
                                    to_string(g.a) + "," + to_string(g.b));
    }
  }
}

std::vector<const Gate2q*> LayeredCircuit::flattened() const {
  std::vector<const Gate2q*> out;
  for (const auto& layer : layers_)
    for (const auto& g : layer) out.push_back(&g);
  return out;
}

std::set<QubitId> LayeredCircuit::support() const {
  std::set<QubitId> s;
  for (const auto& layer : layers_)
    for (const auto& g : layer) {
      s.insert(g.a);
      s.insert(g.b);
    }
  return s;
}

void CircuitBuilder::begin_layer() { layers_.emplace_back(); }

void CircuitBuilder::push(Gate2q g) {
  if (layers_.empty()) layers_.emplace_back();
  layers_.back().push_back(std::move(g));
}

void CircuitBuilder::push_layer(Gate2q g) {
  layers_.emplace_back();
  layers_.back().push_back(std::move(g));
}

void CircuitBuilder::allow(const QubitId& a, const QubitId& b) {
  add_edge(adjacency_, a, b);
}

LayeredCircuit CircuitBuilder::finish() const {
  return LayeredCircuit(layers_, &adjacency_);
}

}  // namespace hqs
