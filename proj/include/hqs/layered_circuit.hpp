#pragma once

#include <set>
#include <string>

#include "hqs/dense_op.hpp"

namespace hqs {

// One nearest-neighbor two-qubit gate. The 4x4 matrix is in the basis
// index = bit(a) + 2*bit(b), i.e. qubit `a` is the fast (low) leg. For CNOT,
// `a` is the control and `b` the target.
struct Gate2q {
  std::string name;  // "CNOT", "SWAP", "H", "S", "U4"
  QubitId a, b;
  Mat u;
};

Mat gate_matrix_cnot();
Mat gate_matrix_swap();
// name in {CNOT, SWAP}; H/S act on `a` (identity on `b`).
Mat named_gate_matrix(const std::string& name);
Gate2q make_gate(const std::string& name, QubitId a, QubitId b);
Gate2q make_u4(QubitId a, QubitId b, const Mat& u);

using EdgeSet = std::set<std::pair<QubitId, QubitId>>;
EdgeSet& add_edge(EdgeSet& es, const QubitId& a, const QubitId& b);
bool has_edge(const EdgeSet& es, const QubitId& a, const QubitId& b);

// Layered local circuit: within a layer gate supports are pairwise disjoint,
// every matrix is unitary within 1e-12, and if an edge set is supplied every
// gate must act on an adjacent pair. Depth D is the layer count.
class LayeredCircuit {
 public:
  LayeredCircuit() = default;
  explicit LayeredCircuit(std::vector<std::vector<Gate2q>> layers,
                          const EdgeSet* adjacency = nullptr);

  int depth() const { return int(layers_.size()); }
  const std::vector<std::vector<Gate2q>>& layers() const { return layers_; }
  std::vector<const Gate2q*> flattened() const;
  std::set<QubitId> support() const;

 private:
  std::vector<std::vector<Gate2q>> layers_;
};

// Builder that appends gates one serialized subroutine at a time.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(EdgeSet adjacency) : adjacency_(std::move(adjacency)) {}
  void begin_layer();
  void push(Gate2q g);           // into the current layer
  void push_layer(Gate2q g);     // single-gate layer
  void allow(const QubitId& a, const QubitId& b);  // extend the gate graph
  LayeredCircuit finish() const;
  const EdgeSet& adjacency() const { return adjacency_; }

 private:
  EdgeSet adjacency_;
  std::vector<std::vector<Gate2q>> layers_;
};

}  // namespace hqs
