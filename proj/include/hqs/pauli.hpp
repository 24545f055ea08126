#pragma once

#include <map>

#include "hqs/dense_op.hpp"

namespace hqs {

// Tensor product of single-qubit Paulis with a phase in {1, i, -1, -i}.
// Identity letters may be omitted from the map; the norm is always 1.
struct PauliString {
  std::map<QubitId, char> letters;  // values in {X, Y, Z}; I entries dropped
  int phase_quarter{0};             // phase = i^phase_quarter

  PauliString() = default;
  explicit PauliString(std::map<QubitId, char> ls, int phase = 0);

  cplx phase() const;
  std::vector<QubitId> support() const;
  int weight() const { return int(letters.size()); }
  char letter_at(const QubitId& q) const;  // 'I' when absent

  bool commutes_with(const PauliString& other) const;
  PauliString operator*(const PauliString& other) const;

  // Dense matrix on the given support order (must cover the letters).
  DenseOperator to_dense(const std::vector<QubitId>& support_order) const;
  DenseOperator to_dense() const;  // on its own support

  std::string to_text() const;  // e.g. "Z:2:0+Z:2:1" (no phase)
  static PauliString from_text(const std::string& text);
};

}  // namespace hqs
