#include "hqs/pauli.hpp"

#include <sstream>

namespace hqs {
namespace {

void check_letter(char c) {
  if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
    throw std::invalid_argument("bad pauli letter");
}

// Phase exponent k (in i^k) from sigma_a * sigma_b = i^k sigma_c, plus c.
std::pair<int, char> mul_letters(char a, char b) {
  if (a == 'I') return {0, b};
  if (b == 'I') return {0, a};
  if (a == b) return {0, 'I'};
  // XY=iZ, YZ=iX, ZX=iY; reversed order gives -i.
  static const std::map<std::pair<char, char>, std::pair<int, char>> table = {
      {{'X', 'Y'}, {1, 'Z'}}, {{'Y', 'Z'}, {1, 'X'}}, {{'Z', 'X'}, {1, 'Y'}},
      {{'Y', 'X'}, {3, 'Z'}}, {{'Z', 'Y'}, {3, 'X'}}, {{'X', 'Z'}, {3, 'Y'}}};
  return table.at({a, b});
}

}  // namespace

PauliString::PauliString(std::map<QubitId, char> ls, int phase)
    : phase_quarter(((phase % 4) + 4) % 4) {
  for (auto& [q, c] : ls) {
    check_letter(c);
    if (c != 'I') letters.emplace(q, c);
  }
}

cplx PauliString::phase() const {
  static const cplx table[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0),
                                cplx(0, -1)};
  return table[phase_quarter];
}

std::vector<QubitId> PauliString::support() const {
  std::vector<QubitId> out;
  for (auto& [q, c] : letters) out.push_back(q);
  return out;
}

char PauliString::letter_at(const QubitId& q) const {
  auto it = letters.find(q);
  return it == letters.end() ? 'I' : it->second;
}

bool PauliString::commutes_with(const PauliString& other) const {
  int anti = 0;
  for (auto& [q, c] : letters) {
    char oc = other.letter_at(q);
    if (oc != 'I' && oc != c) anti ^= 1;
  }
  return anti == 0;
}

PauliString PauliString::operator*(const PauliString& other) const {
  PauliString out;
  out.phase_quarter = (phase_quarter + other.phase_quarter) % 4;
  std::map<QubitId, char> merged = letters;
  for (auto& [q, oc] : other.letters) {
    auto it = merged.find(q);
    if (it == merged.end()) {
      merged.emplace(q, oc);
    } else {
      auto [k, c] = mul_letters(it->second, oc);
      out.phase_quarter = (out.phase_quarter + k) % 4;
      if (c == 'I') merged.erase(it);
      else it->second = c;
    }
  }
  out.letters = std::move(merged);
  return out;
}

DenseOperator PauliString::to_dense(
    const std::vector<QubitId>& support_order) const {
  Mat m = Mat::Ones(1, 1);
  for (const auto& q : support_order) m = kron_le(m, pauli_mat(letter_at(q)));
  for (auto& [q, c] : letters)
    if (std::find(support_order.begin(), support_order.end(), q) ==
        support_order.end())
      throw std::invalid_argument("pauli support not covered");
  return DenseOperator(support_order, phase() * m);
}

DenseOperator PauliString::to_dense() const { return to_dense(support()); }

std::string PauliString::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [q, c] : letters) {
    if (!first) os << "+";
    os << c << ":" << q.row << ":" << q.col;
    first = false;
  }
  if (first) os << "I";
  return os.str();
}

PauliString PauliString::from_text(const std::string& text) {
  PauliString out;
  if (text == "I" || text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '+')) {
    auto p1 = item.find(':');
    auto p2 = item.find(':', p1 + 1);
    if (p1 != 1 || p2 == std::string::npos)
      throw std::invalid_argument("bad pauli text: " + text);
    char letter = item[0];
    check_letter(letter);
    int row = std::stoi(item.substr(p1 + 1, p2 - p1 - 1));
    int col = std::stoi(item.substr(p2 + 1));
    if (letter != 'I')
      out.letters.emplace(QubitId::system(row, col), letter);
  }
  return out;
}

}  // namespace hqs
