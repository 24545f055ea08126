#include "hqs/stab_verify.hpp"

#include <algorithm>

namespace hqs {
namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed ^ (salt * 0x9e3779b97f4a7c15ULL);
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  return x;
}

}  // namespace

StabilizerRunner::StabilizerRunner(int lx, int ly,
                                   const std::vector<ParsedTransition>& blocks,
                                   std::uint64_t seed)
    : lx_(lx), ly_(ly), blocks_(&blocks), tab_(1), rng_(seed), seed_(seed) {
  int next = 0;
  for (int c = 0; c < lx; ++c) fixed_[QubitId::bath(c)] = next++;
  for (int t = 1; t <= ly; ++t)
    for (int c = 0; c < lx; ++c) fixed_[QubitId::system(t, c)] = next++;
  pool_base_ = next;
  for (const auto& b : blocks) pool_size_ = std::max(pool_size_, int(b.sink.size()));
  tab_ = Tableau(pool_base_ + std::max(pool_size_, 1));
}

int StabilizerRunner::index_of(const QubitId& q) const {
  auto it = fixed_.find(q);
  if (it != fixed_.end()) return it->second;
  auto ip = pool_.find(q);
  if (ip != pool_.end()) return ip->second;
  throw std::invalid_argument("unmapped qubit: " + to_string(q));
}

void StabilizerRunner::prep(int idx, const Mat& state) {
  if ((state - ket0_dm()).cwiseAbs().maxCoeff() < 1e-12) {
    tab_.reset_z(idx, rng_);
  } else if ((state - ket1_dm()).cwiseAbs().maxCoeff() < 1e-12) {
    tab_.reset_z(idx, rng_);
    tab_.x(idx);
  } else if ((state - ketplus_dm()).cwiseAbs().maxCoeff() < 1e-12) {
    tab_.reset_x(idx, rng_);
  } else {
    Mat xminus(2, 2);
    xminus << 0.5, -0.5, -0.5, 0.5;
    if ((state - xminus).cwiseAbs().maxCoeff() < 1e-12) {
      tab_.reset_x(idx, rng_);
      tab_.z(idx);
    } else {
      throw std::invalid_argument("non-stabilizer preparation state");
    }
  }
}

void StabilizerRunner::inject_pair_fault(int a, int b) {
  const int code = int(rng_() % 16);
  const int la = code & 3, lb = code >> 2;
  auto apply = [&](int q, int letter) {
    if (letter == 1) tab_.x(q);
    if (letter == 2) tab_.y(q);
    if (letter == 3) tab_.z(q);
  };
  apply(a, la);
  apply(b, lb);
}

void StabilizerRunner::run_transition(const ParsedTransition& block,
                                      const StabilizerRunner::PauliFault& fault) {
  // Map this step's sink declarations onto the pool.
  pool_.clear();
  int slot = pool_base_;
  for (const auto& q : block.sink) pool_[q] = slot++;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto prep_noisy = [&](const QubitId& q) {
    const int idx = index_of(q);
    const Mat& state = block.preps.at(q);
    prep(idx, state);
    if (fault.state_q > 0.0 && unit(rng_) < fault.state_q / 2.0) {
      // Mixing a basis state with I/2 is a half-weight flip in its basis.
      if (std::abs(state(0, 1)) < 1e-12) tab_.x(idx);
      else tab_.z(idx);
    }
  };
  for (const auto& q : block.system) prep_noisy(q);
  for (const auto& q : block.sink) prep_noisy(q);
  for (const auto& g : block.gates) {
    const int a = index_of(g.a), b = index_of(g.b);
    if (g.name == "CNOT") tab_.cnot(a, b);
    else if (g.name == "SWAP") tab_.swap(a, b);
    else if (g.name == "H") tab_.h(a);
    else if (g.name == "S") tab_.s(a);
    else
      throw std::invalid_argument("non-Clifford gate encountered: " + g.name);
    if (fault.gate_p > 0.0 && unit(rng_) < fault.gate_p)
      inject_pair_fault(a, b);
  }
}

void StabilizerRunner::run(const PauliFault& fault) {
  tab_ = Tableau(tab_.num_qubits());
  rng_.seed(mix_seed(seed_, 0x73686f74ULL));
  for (const auto& block : *blocks_) run_transition(block, fault);
}

int StabilizerRunner::expectation(const PauliString& p) const {
  std::vector<char> letters(tab_.num_qubits(), 'I');
  for (const auto& [q, c] : p.letters) letters[index_of(q)] = c;
  const int raw = tab_.pauli_expectation(letters);
  if (p.phase_quarter == 0) return raw;
  if (p.phase_quarter == 2) return -raw;
  throw std::invalid_argument("non-Hermitian pauli phase");
}

StabilizerEncodeResult stabilizer_encode_surface(int lx, int ly,
                                                 std::uint64_t seed) {
  // Export and re-parse: the tableau consumes the same text format as the
  // dense engine's cross-checks.
  std::string text;
  for (int t = 1; t <= ly; ++t)
    text += export_circuit_text(surface_code_transition(lx, t, ly), ly,
                                "surface-code");
  auto blocks = parse_circuit_blocks(text);
  StabilizerRunner runner(lx, ly, blocks, seed);
  runner.run({});
  StabilizerEncodeResult out;
  for (const auto& g : surface_code_generators(lx, ly))
    out.generator_values.push_back(runner.expectation(stabilizer_pauli(g)));
  out.logical_z_last_row = runner.expectation(logical_z_row(lx, ly));
  return out;
}

AnnihilationReport check_row_annihilation(int lx) {
  if (lx < 3 || lx % 2 == 0)
    throw std::invalid_argument("annihilation check needs odd lx >= 3");
  AnnihilationReport report;
  report.lx = lx;
  const int ly = 6;  // tall enough that rows 3 and 4 are bulk
  const auto gens = surface_code_generators(lx, ly);
  const char alphabet[4] = {'I', 'X', 'Y', 'Z'};
  std::set<std::string> survivors;
  for (int row : {3, 4}) {  // both column parities of the surrounding layers
    std::vector<const SurfaceStabilizer*> surrounding;
    for (const auto& g : gens)
      for (auto [r, c] : g.sites)
        if (r == row) {
          surrounding.push_back(&g);
          break;
        }
    const std::size_t total = std::size_t(1) << (2 * lx);
    for (std::size_t code = 1; code < total; ++code) {
      std::map<QubitId, char> letters;
      std::size_t c = code;
      for (int q = 0; q < lx; ++q) {
        if (alphabet[c & 3] != 'I')
          letters[QubitId::system(row, q)] = alphabet[c & 3];
        c >>= 2;
      }
      PauliString p(letters);
      ++report.candidates;
      bool killed = false;
      for (const auto* g : surrounding)
        if (!p.commutes_with(stabilizer_pauli(*g))) {
          killed = true;
          break;
        }
      if (!killed) {
        std::string letters_only;
        std::size_t cc = code;
        for (int q = 0; q < lx; ++q) {
          letters_only += alphabet[cc & 3];
          cc >>= 2;
        }
        survivors.insert(letters_only);
      }
    }
  }
  report.survivors.assign(survivors.begin(), survivors.end());
  report.pass = report.survivors == std::vector<std::string>{
                                        std::string(std::size_t(lx), 'Z')};
  return report;
}

}  // namespace hqs
