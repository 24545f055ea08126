#include "hqs/tableau.hpp"

#include <stdexcept>

#include "hqs/kernels.hpp"

namespace hqs {
namespace {

// Exponent of i in sigma_(x1,z1) * sigma_(x2,z2) relative to the letterwise
// product (Aaronson-Gottesman g function), mod 4.
int g_phase(int x1, int z1, int x2, int z2) {
  if (x1 == 0 && z1 == 0) return 0;
  if (x1 == 1 && z1 == 1) return z2 - x2;
  if (x1 == 1 && z1 == 0) return z2 * (2 * x2 - 1);
  return x2 * (1 - 2 * z2);
}

}  // namespace

Tableau::Tableau(int n) : n_(n), rows_(2 * n), words_((2 * n + 63) / 64) {
  if (n <= 0) throw std::invalid_argument("tableau needs at least one qubit");
  xz_.assign(std::size_t(2 * n) * words_, 0);
  r_.assign(words_, 0);
  for (int q = 0; q < n; ++q) {
    flip_bit(xcol(q), q);        // destabilizer X_q
    flip_bit(zcol(q), n_ + q);   // stabilizer Z_q
  }
}

void Tableau::h(int q) {
  // X <-> Z; the Y rows pick up a sign.
  for (int w = 0; w < words_; ++w) r_[w] ^= xcol(q)[w] & zcol(q)[w];
  for (int w = 0; w < words_; ++w) std::swap(xcol(q)[w], zcol(q)[w]);
}

void Tableau::s(int q) {
  for (int w = 0; w < words_; ++w) r_[w] ^= xcol(q)[w] & zcol(q)[w];
  kernels::ops().xor_words(zcol(q), xcol(q), words_);
}

void Tableau::cnot(int control, int target) {
  kernels::ops().cnot_words(xcol(control), zcol(control), xcol(target),
                            zcol(target), r_.data(), words_);
}

void Tableau::swap(int a, int b) {
  for (int w = 0; w < words_; ++w) {
    std::swap(xcol(a)[w], xcol(b)[w]);
    std::swap(zcol(a)[w], zcol(b)[w]);
  }
}

void Tableau::x(int q) {
  kernels::ops().xor_words(r_.data(), zcol(q), words_);
}

void Tableau::z(int q) {
  kernels::ops().xor_words(r_.data(), xcol(q), words_);
}

void Tableau::y(int q) {
  for (int w = 0; w < words_; ++w) r_[w] ^= xcol(q)[w] ^ zcol(q)[w];
}

void Tableau::rowsum(int h, int i) {
  int phase = 2 * int(rbit(h)) + 2 * int(rbit(i));
  for (int q = 0; q < n_; ++q) {
    const int xi = get_bit(xcol(q), i), zi = get_bit(zcol(q), i);
    const int xh = get_bit(xcol(q), h), zh = get_bit(zcol(q), h);
    phase += g_phase(xi, zi, xh, zh);
    if (xi) flip_bit(xcol(q), h);
    if (zi) flip_bit(zcol(q), h);
  }
  phase = ((phase % 4) + 4) % 4;
  if (phase == 1 || phase == 3)
    throw std::logic_error("rowsum produced an imaginary phase");
  if ((phase >> 1) != int(rbit(h))) rflip(h);
}

int Tableau::first_stab_x(int q) const {
  for (int row = n_; row < rows_; ++row)
    if (get_bit(xcol(q), row)) return row;
  return -1;
}

int Tableau::measure_z(int q, std::mt19937_64& rng) {
  const int p = first_stab_x(q);
  if (p >= 0) {
    // Random outcome: update every other row carrying X_q. The paired
    // destabilizer is skipped; it is overwritten below.
    for (int h = 0; h < rows_; ++h)
      if (h != p && h != p - n_ && get_bit(xcol(q), h)) rowsum(h, p);
    // Destabilizer row p-n becomes the old stabilizer row p.
    const int d = p - n_;
    for (int qq = 0; qq < n_; ++qq) {
      if (get_bit(xcol(qq), d)) flip_bit(xcol(qq), d);
      if (get_bit(zcol(qq), d)) flip_bit(zcol(qq), d);
      if (get_bit(xcol(qq), p)) {
        flip_bit(xcol(qq), d);
        flip_bit(xcol(qq), p);
      }
      if (get_bit(zcol(qq), p)) {
        flip_bit(zcol(qq), d);
        flip_bit(zcol(qq), p);
      }
    }
    if (rbit(p)) {
      if (!rbit(d)) rflip(d);
      rflip(p);
    } else if (rbit(d)) {
      rflip(d);
    }
    const int outcome = int(rng() & 1);
    flip_bit(zcol(q), p);
    if (outcome) rflip(p);
    return outcome;
  }
  // Deterministic: accumulate the product of stabilizers flagged by
  // anticommuting destabilizers into a scratch row.
  std::vector<int> sx(n_, 0), sz(n_, 0);
  int phase = 0;
  for (int i = 0; i < n_; ++i) {
    if (!get_bit(xcol(q), i)) continue;
    const int row = n_ + i;
    phase += 2 * int(rbit(row));
    for (int qq = 0; qq < n_; ++qq) {
      const int xr = get_bit(xcol(qq), row), zr = get_bit(zcol(qq), row);
      phase += g_phase(sx[qq], sz[qq], xr, zr);
      sx[qq] ^= xr;
      sz[qq] ^= zr;
    }
  }
  phase = ((phase % 4) + 4) % 4;
  if (phase == 1 || phase == 3)
    throw std::logic_error("deterministic measurement with imaginary phase");
  return phase == 2 ? 1 : 0;
}

void Tableau::reset_z(int q, std::mt19937_64& rng) {
  if (measure_z(q, rng) == 1) x(q);
}

void Tableau::reset_x(int q, std::mt19937_64& rng) {
  reset_z(q, rng);
  h(q);
}

int Tableau::pauli_expectation(const std::vector<char>& letters) const {
  if (int(letters.size()) != n_)
    throw std::invalid_argument("letters size mismatch");
  // Anticommutation mask against every row.
  std::vector<std::uint64_t> acc(words_, 0);
  std::vector<int> px(n_, 0), pz(n_, 0);
  int p_phase = 0;
  for (int q = 0; q < n_; ++q) {
    switch (letters[q]) {
      case 'I': break;
      case 'X': px[q] = 1; break;
      case 'Y': px[q] = 1; pz[q] = 1; break;
      case 'Z': pz[q] = 1; break;
      default: throw std::invalid_argument("bad pauli letter");
    }
    if (px[q]) kernels::ops().xor_words(acc.data(), zcol(q), words_);
    if (pz[q]) kernels::ops().xor_words(acc.data(), xcol(q), words_);
  }
  // Any anticommuting stabilizer row -> expectation 0.
  for (int row = n_; row < rows_; ++row)
    if ((acc[row >> 6] >> (row & 63)) & 1) return 0;
  // P commutes with the group: P = +- product of stabilizer rows flagged by
  // anticommuting destabilizers.
  std::vector<int> sx(n_, 0), sz(n_, 0);
  int phase = 0;
  for (int i = 0; i < n_; ++i) {
    if (!((acc[i >> 6] >> (i & 63)) & 1)) continue;
    const int row = n_ + i;
    phase += 2 * int(rbit(row));
    for (int qq = 0; qq < n_; ++qq) {
      const int xr = get_bit(xcol(qq), row), zr = get_bit(zcol(qq), row);
      phase += g_phase(sx[qq], sz[qq], xr, zr);
      sx[qq] ^= xr;
      sz[qq] ^= zr;
    }
  }
  if (sx != px || sz != pz)
    throw std::logic_error("pauli_expectation: group membership mismatch");
  phase = ((phase % 4) + 4) % 4;
  if (phase == 1 || phase == 3)
    throw std::logic_error("pauli_expectation: imaginary phase");
  return phase == 2 ? -1 : 1;
}

bool Tableau::check_invariants() const {
  // Stabilizer rows pairwise commute; destabilizer i anticommutes exactly
  // with stabilizer i.
  auto symp = [&](int row_a, int row_b) {
    int acc = 0;
    for (int q = 0; q < n_; ++q)
      acc ^= (get_bit(xcol(q), row_a) & get_bit(zcol(q), row_b)) ^
             (get_bit(zcol(q), row_a) & get_bit(xcol(q), row_b));
    return acc;
  };
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) {
      if (symp(n_ + i, n_ + j) != 0) return false;
      if (symp(i, j) != 0) return false;
      if (symp(i, n_ + j) != (i == j ? 1 : 0)) return false;
    }
  return true;
}

}  // namespace hqs
