#pragma once

#include "hqs/transition_map.hpp"

namespace hqs {

// Plain-text circuit description shared by the dense engine and the
// stabilizer oracle; both sides parse the same file, which pins circuit
// identity. One gate per line: layer, gate name, control, target. Single
// qubit preparations are `prep <qubit> <state>` with state in
// {Z+, Z-, X+, X-} or `M <8 floats>` (row-major 2x2 density).
std::string export_circuit_text(const TransitionMap& tm, int ly,
                                const std::string& model);

struct ParsedGate {
  int layer{0};
  std::string name;
  QubitId a, b;
  Mat u;
};

struct ParsedTransition {
  std::string model;
  int lx{0};
  int ly{0};
  int row{0};
  std::vector<QubitId> bath, system, sink;
  std::map<QubitId, Mat> preps;  // system and sink initial states
  std::vector<ParsedGate> gates; // in execution order
};

ParsedTransition parse_circuit_text(const std::string& text);

// Multi-block file: one block per transition row.
std::vector<ParsedTransition> parse_circuit_blocks(const std::string& text);

// Rebuild an executable map from a parsed block (adjacency is taken on
// faith from the file).
TransitionMap transition_from_parsed(const ParsedTransition& p);

}  // namespace hqs
