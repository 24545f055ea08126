#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hqs {

// The three qubit roles of the 1D device, plus subroutine ancillas (which
// live in the sink for channel bookkeeping).
enum class Reg : std::uint8_t { Bath = 0, System = 1, Sink = 2, Ancilla = 3 };

// A device/lattice qubit. `row` is the row index t for System/Sink, 0 for
// Bath, and the subroutine slot for Ancilla. `col` is the column in [0, lx).
struct QubitId {
  Reg reg{Reg::Bath};
  std::int16_t row{0};
  std::int16_t col{0};

  auto operator<=>(const QubitId&) const = default;

  static QubitId bath(int col) { return {Reg::Bath, 0, std::int16_t(col)}; }
  static QubitId system(int row, int col) {
    return {Reg::System, std::int16_t(row), std::int16_t(col)};
  }
  static QubitId sink(int row, int col) {
    return {Reg::Sink, std::int16_t(row), std::int16_t(col)};
  }
  static QubitId ancilla(int slot, int col) {
    return {Reg::Ancilla, std::int16_t(slot), std::int16_t(col)};
  }
};

// Text form "b:0:2", "s:3:1", "k:3:0", "a:5:1" (register:row:col). This is
// the vertex naming shared by the graph dump and the circuit text format.
std::string to_string(const QubitId& q);
QubitId parse_qubit(const std::string& text);

std::vector<QubitId> bath_row(int lx);
std::vector<QubitId> system_row(int t, int lx);
std::vector<QubitId> sink_row(int t, int lx);

}  // namespace hqs
