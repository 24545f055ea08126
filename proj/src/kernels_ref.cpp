#include "hqs/kernels.hpp"

// Scalar reference kernels. These are the semantics; the SIMD variants are
// equivalence-tested against them.

namespace hqs::kernels {
namespace {

void apply1_ref(cplx* v, std::size_t n, int leg, const cplx* m) {
  const std::size_t stride = std::size_t(1) << leg;
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const cplx a0 = v[i];
      const cplx a1 = v[i + stride];
      v[i] = m[0] * a0 + m[1] * a1;
      v[i + stride] = m[2] * a0 + m[3] * a1;
    }
  }
}

void apply2_ref(cplx* v, std::size_t n, int leg_a, int leg_b, const cplx* m) {
  const std::size_t sa = std::size_t(1) << leg_a;
  const std::size_t sb = std::size_t(1) << leg_b;
  const std::size_t mask = sa | sb;
  for (std::size_t i = 0; i < n; ++i) {
    if (i & mask) continue;
    const cplx a0 = v[i];
    const cplx a1 = v[i + sa];
    const cplx a2 = v[i + sb];
    const cplx a3 = v[i + sa + sb];
    v[i] = m[0] * a0 + m[1] * a1 + m[2] * a2 + m[3] * a3;
    v[i + sa] = m[4] * a0 + m[5] * a1 + m[6] * a2 + m[7] * a3;
    v[i + sb] = m[8] * a0 + m[9] * a1 + m[10] * a2 + m[11] * a3;
    v[i + sa + sb] = m[12] * a0 + m[13] * a1 + m[14] * a2 + m[15] * a3;
  }
}

void axpy_ref(cplx* y, const cplx* x, cplx a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void blend_ref(cplx* y, const cplx* x, cplx a, cplx b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = a * y[i] + b * x[i];
}

cplx dot_ref(const cplx* x, const cplx* y, std::size_t n) {
  cplx acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

void trace_leg_pair_ref(const cplx* v, std::size_t n, int ket_leg, int bra_leg,
                        cplx* out) {
  const std::size_t sk = std::size_t(1) << ket_leg;
  const std::size_t sb = std::size_t(1) << bra_leg;
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i & (sk | sb)) continue;
    out[j++] = v[i] + v[i + sk + sb];
  }
}

void xor_words_ref(std::uint64_t* dst, const std::uint64_t* src,
                   std::size_t nw) {
  for (std::size_t i = 0; i < nw; ++i) dst[i] ^= src[i];
}

void cnot_words_ref(std::uint64_t* xa, std::uint64_t* za, std::uint64_t* xb,
                    std::uint64_t* zb, std::uint64_t* r, std::size_t nw) {
  for (std::size_t i = 0; i < nw; ++i) {
    r[i] ^= xa[i] & zb[i] & ~(xb[i] ^ za[i]);
    xb[i] ^= xa[i];
    za[i] ^= zb[i];
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table{apply1_ref,  apply2_ref,    axpy_ref,
                         blend_ref,   dot_ref,       trace_leg_pair_ref,
                         xor_words_ref, cnot_words_ref, "scalar"};
  return table;
}

}  // namespace hqs::kernels
