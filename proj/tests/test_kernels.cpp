#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "hqs/kernels.hpp"

using hqs::kernels::avx2_available;
using hqs::kernels::avx2_ops;
using hqs::kernels::cplx;
using hqs::kernels::Ops;
using hqs::kernels::scalar_ops;

namespace {

std::vector<cplx> random_vec(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& x : v) x = cplx(g(rng), g(rng));
  return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("scalar apply1 matches direct matrix action") {
  std::mt19937_64 rng(7);
  const int legs = 4;
  const std::size_t n = 1u << legs;
  auto v = random_vec(n, rng);
  auto m = random_vec(4, rng);
  for (int leg = 0; leg < legs; ++leg) {
    auto got = v;
    scalar_ops().apply1(got.data(), n, leg, m.data());
    const std::size_t s = std::size_t(1) << leg;
    for (std::size_t i = 0; i < n; ++i) {
      if (i & s) continue;
      cplx e0 = m[0] * v[i] + m[1] * v[i + s];
      cplx e1 = m[2] * v[i] + m[3] * v[i + s];
      CHECK(std::abs(got[i] - e0) < 1e-12);
      CHECK(std::abs(got[i + s] - e1) < 1e-12);
    }
  }
}

TEST_CASE("apply2 composed from apply1 factors") {
  // A (x) B on legs (a, b) must equal apply2 with the kron matrix
  // m[(ia + 2 ib), (ja + 2 jb)] = A[ia, ja] * B[ib, jb].
  std::mt19937_64 rng(11);
  const int legs = 5;
  const std::size_t n = 1u << legs;
  auto v = random_vec(n, rng);
  auto a = random_vec(4, rng);
  auto b = random_vec(4, rng);
  std::vector<cplx> m(16);
  for (int ia = 0; ia < 2; ++ia)
    for (int ib = 0; ib < 2; ++ib)
      for (int ja = 0; ja < 2; ++ja)
        for (int jb = 0; jb < 2; ++jb)
          m[(ia + 2 * ib) * 4 + (ja + 2 * jb)] = a[ia * 2 + ja] * b[ib * 2 + jb];
  auto via2 = v;
  scalar_ops().apply2(via2.data(), n, 1, 3, m.data());
  auto via1 = v;
  scalar_ops().apply1(via1.data(), n, 1, a.data());
  scalar_ops().apply1(via1.data(), n, 3, b.data());
  CHECK(max_diff(via1, via2) < 1e-12);
}

TEST_CASE("simd variants agree with scalar reference") {
  if (!avx2_available()) {
    MESSAGE("avx2 not available; dispatch falls back to scalar");
    return;
  }
  const Ops& fast = avx2_ops();
  const Ops& ref = scalar_ops();
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int legs = 2 + int(rng() % 9);
    const std::size_t n = std::size_t(1) << legs;
    auto v = random_vec(n, rng);
    auto m1 = random_vec(4, rng);
    auto m2 = random_vec(16, rng);

    const int la = int(rng() % legs);
    auto r1 = v, f1 = v;
    ref.apply1(r1.data(), n, la, m1.data());
    fast.apply1(f1.data(), n, la, m1.data());
    CHECK(max_diff(r1, f1) < 1e-12);

    int lb = int(rng() % legs);
    if (lb == la) lb = (lb + 1) % legs;
    auto r2 = v, f2 = v;
    ref.apply2(r2.data(), n, la, lb, m2.data());
    fast.apply2(f2.data(), n, la, lb, m2.data());
    CHECK(max_diff(r2, f2) < 1e-12);

    auto x = random_vec(n, rng);
    const cplx alpha(0.3, -0.8), beta(-1.1, 0.2);
    auto ry = v, fy = v;
    ref.axpy(ry.data(), x.data(), alpha, n);
    fast.axpy(fy.data(), x.data(), alpha, n);
    CHECK(max_diff(ry, fy) < 1e-12);

    ry = v;
    fy = v;
    ref.blend(ry.data(), x.data(), alpha, beta, n);
    fast.blend(fy.data(), x.data(), alpha, beta, n);
    CHECK(max_diff(ry, fy) < 1e-12);

    const cplx dr = ref.dot(v.data(), x.data(), n);
    const cplx df = fast.dot(v.data(), x.data(), n);
    CHECK(std::abs(dr - df) < 1e-10 * (1.0 + std::abs(dr)));
  }
}

TEST_CASE("bitwise kernels agree exactly") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t nw = 1 + rng() % 9;
    auto fill = [&] {
      std::vector<std::uint64_t> w(nw);
      for (auto& x : w) x = rng();
      return w;
    };
    auto xa = fill(), za = fill(), xb = fill(), zb = fill(), r = fill();
    auto xa2 = xa, za2 = za, xb2 = xb, zb2 = zb, r2 = r;
    scalar_ops().cnot_words(xa.data(), za.data(), xb.data(), zb.data(),
                            r.data(), nw);
    const Ops& fast = avx2_available() ? avx2_ops() : scalar_ops();
    fast.cnot_words(xa2.data(), za2.data(), xb2.data(), zb2.data(), r2.data(),
                    nw);
    CHECK(xa == xa2);
    CHECK(za == za2);
    CHECK(xb == xb2);
    CHECK(zb == zb2);
    CHECK(r == r2);

    auto d1 = fill();
    auto d2 = d1;
    auto s = fill();
    scalar_ops().xor_words(d1.data(), s.data(), nw);
    fast.xor_words(d2.data(), s.data(), nw);
    CHECK(d1 == d2);
  }
}

TEST_CASE("trace_leg_pair contracts a ket/bra pair") {
  std::mt19937_64 rng(41);
  const std::size_t n = 1u << 6;
  auto v = random_vec(n, rng);
  std::vector<cplx> out(n / 4);
  scalar_ops().trace_leg_pair(v.data(), n, 1, 4, out.data());
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i & ((1u << 1) | (1u << 4))) continue;
    CHECK(std::abs(out[j] - (v[i] + v[i + 2 + 16])) < 1e-12);
    ++j;
  }
  CHECK(j == out.size());
}
