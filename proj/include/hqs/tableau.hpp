#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hqs {

// Stabilizer/destabilizer tableau with column-major bit packing: for each
// qubit the X and Z bits of all 2n generator rows live in one word array,
// so Clifford updates are word-parallel (rows 0..n-1 destabilizers,
// n..2n-1 stabilizers).
class Tableau {
 public:
  explicit Tableau(int n);  // |0...0>

  int num_qubits() const { return n_; }

  void h(int q);
  void s(int q);
  void cnot(int control, int target);
  void swap(int a, int b);
  void x(int q);
  void y(int q);
  void z(int q);

  // Standard CHP measurement in the Z basis; deterministic outcomes consume
  // no randomness.
  int measure_z(int q, std::mt19937_64& rng);
  void reset_z(int q, std::mt19937_64& rng);  // to |0>
  void reset_x(int q, std::mt19937_64& rng);  // to |+>

  // +1/-1 when +-P is in the stabilizer group, 0 when P anticommutes with
  // some generator. letters[q] in {'I','X','Y','Z'}.
  int pauli_expectation(const std::vector<char>& letters) const;

  // Debug-build invariants: stabilizer rows commute and the symplectic
  // matrix has full rank.
  bool check_invariants() const;

 private:
  std::uint64_t* xcol(int q) { return xz_.data() + std::size_t(2 * q) * words_; }
  std::uint64_t* zcol(int q) {
    return xz_.data() + std::size_t(2 * q + 1) * words_;
  }
  const std::uint64_t* xcol(int q) const {
    return xz_.data() + std::size_t(2 * q) * words_;
  }
  const std::uint64_t* zcol(int q) const {
    return xz_.data() + std::size_t(2 * q + 1) * words_;
  }
  bool get_bit(const std::uint64_t* w, int row) const {
    return (w[row >> 6] >> (row & 63)) & 1;
  }
  void flip_bit(std::uint64_t* w, int row) { w[row >> 6] ^= 1ull << (row & 63); }
  bool rbit(int row) const { return (r_[row >> 6] >> (row & 63)) & 1; }
  void rflip(int row) { r_[row >> 6] ^= 1ull << (row & 63); }
  int first_stab_x(int q) const;  // stabilizer row with x bit, or -1
  void rowsum(int h, int i);      // R_h <- R_i * R_h (CHP phase arithmetic)

  int n_;
  int rows_;
  int words_;
  std::vector<std::uint64_t> xz_;  // 2n columns, each words_ long
  std::vector<std::uint64_t> r_;
};

}  // namespace hqs
