#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace hqs::kernels {

using cplx = std::complex<double>;

// Inner loops of the dense simulator and the tableau, as a dispatch table.
// All dense kernels act on a contiguous array of 2^m amplitudes; a "leg" is a
// bit position of the index (leg 0 is the fastest-varying bit).
struct Ops {
  // v <- (M on leg) v, M is a 2x2 row-major complex matrix.
  void (*apply1)(cplx* v, std::size_t n, int leg, const cplx* m);
  // v <- (M on legs (a,b)) v, M is 4x4 row-major; basis order is
  // index = bit(a) + 2*bit(b).
  void (*apply2)(cplx* v, std::size_t n, int leg_a, int leg_b, const cplx* m);
  // y += a * x
  void (*axpy)(cplx* y, const cplx* x, cplx a, std::size_t n);
  // y = a*y + b*x
  void (*blend)(cplx* y, const cplx* x, cplx a, cplx b, std::size_t n);
  // sum_i conj(x[i]) * y[i]
  cplx (*dot)(const cplx* x, const cplx* y, std::size_t n);
  // out[j] = sum_{s} v[insert bits s at ket_leg and bra_leg of j], i.e. the
  // partial trace over one (ket, bra) leg pair. ket_leg < bra_leg required.
  void (*trace_leg_pair)(const cplx* v, std::size_t n, int ket_leg,
                         int bra_leg, cplx* out);
  // dst ^= src over nw 64-bit words.
  void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src,
                    std::size_t nw);
  // Fused CHP CNOT column update: r ^= xa & zb & ~(xb ^ za), then
  // xb ^= xa, za ^= zb.
  void (*cnot_words)(std::uint64_t* xa, std::uint64_t* za, std::uint64_t* xb,
                     std::uint64_t* zb, std::uint64_t* r, std::size_t nw);
  const char* name;
};

// Active table. Chosen at first use: AVX2 when the CPU supports it, scalar
// otherwise. HQS_KERNEL=scalar|avx2 forces a table.
const Ops& ops();

const Ops& scalar_ops();
bool avx2_available();
// Only valid to call when avx2_available().
const Ops& avx2_ops();

}  // namespace hqs::kernels
