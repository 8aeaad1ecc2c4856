#include "annni/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace annni {

namespace {

constexpr cplx kI{0.0, 1.0};

// phase_table[a][b] = k such that sigma_a * sigma_b = i^k * sigma_(a xor-combined b)
// with operators indexed I=0, X=1, Y=2, Z=3.
constexpr int phase_exp_table[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},  // X*Y = iZ, X*Z = -iY
    {0, 3, 0, 1},  // Y*X = -iZ, Y*Z = iX
    {0, 1, 3, 0},  // Z*X = iY, Z*Y = -iX
};

cplx phase_from_exp(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

PauliString::PauliString(int length) : length_(length) {
  if (length < 1 || length > 63)
    throw std::invalid_argument("PauliString length out of range");
}

PauliString PauliString::from_word(const std::string& word) {
  PauliString s(static_cast<int>(word.size()));
  for (int j = 0; j < s.length_; ++j) {
    switch (word[static_cast<size_t>(j)]) {
      case 'I': break;
      case 'X': s.set_op(j, PauliOp::X); break;
      case 'Y': s.set_op(j, PauliOp::Y); break;
      case 'Z': s.set_op(j, PauliOp::Z); break;
      default: throw std::invalid_argument("bad Pauli letter in word: " + word);
    }
  }
  return s;
}

PauliOp PauliString::op(int site) const {
  const uint64_t bit = 1ull << (length_ - 1 - site);
  const bool x = x_mask_ & bit;
  const bool z = z_mask_ & bit;
  if (x && z) return PauliOp::Y;
  if (x) return PauliOp::X;
  if (z) return PauliOp::Z;
  return PauliOp::I;
}

void PauliString::set_op(int site, PauliOp op) {
  if (site < 0 || site >= length_) throw std::out_of_range("site out of range");
  const uint64_t bit = 1ull << (length_ - 1 - site);
  x_mask_ &= ~bit;
  z_mask_ &= ~bit;
  if (op == PauliOp::X || op == PauliOp::Y) x_mask_ |= bit;
  if (op == PauliOp::Z || op == PauliOp::Y) z_mask_ |= bit;
}

int PauliString::y_count() const {
  return std::popcount(x_mask_ & z_mask_);
}

std::string PauliString::word() const {
  std::string w(static_cast<size_t>(length_), 'I');
  static constexpr char letters[4] = {'I', 'X', 'Y', 'Z'};
  for (int j = 0; j < length_; ++j)
    w[static_cast<size_t>(j)] = letters[static_cast<int>(op(j))];
  return w;
}

std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b) {
  if (a.length() != b.length())
    throw std::invalid_argument("PauliString length mismatch in multiply");
  PauliString prod(a.length());
  int exp = 0;
  for (int j = 0; j < a.length(); ++j) {
    const int oa = static_cast<int>(a.op(j));
    const int ob = static_cast<int>(b.op(j));
    exp += phase_exp_table[oa][ob];
    // product operator: XOR of the (x, z) bit pairs
    static constexpr PauliOp from_bits[4] = {PauliOp::I, PauliOp::X, PauliOp::Z,
                                             PauliOp::Y};
    const int xa = (oa == 1 || oa == 2) ? 1 : 0;
    const int za = (oa == 3 || oa == 2) ? 1 : 0;
    const int xb = (ob == 1 || ob == 2) ? 1 : 0;
    const int zb = (ob == 3 || ob == 2) ? 1 : 0;
    prod.set_op(j, from_bits[(xa ^ xb) | ((za ^ zb) << 1)]);
  }
  return {phase_from_exp(exp), prod};
}

PauliSum::PauliSum(int length, std::vector<PauliTerm> terms)
    : length_(length), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.string.length() != length_)
      throw std::invalid_argument("term length mismatch in PauliSum");
}

void PauliSum::add(cplx coeff, const PauliString& s) {
  if (length_ == 0) length_ = s.length();
  if (s.length() != length_)
    throw std::invalid_argument("term length mismatch in PauliSum::add");
  terms_.push_back({coeff, s});
}

PauliSum PauliSum::normalized(double cutoff) const {
  std::map<std::string, std::pair<cplx, PauliString>> merged;
  for (const auto& t : terms_) {
    auto key = t.string.word();
    auto it = merged.find(key);
    if (it == merged.end())
      merged.emplace(std::move(key), std::make_pair(t.coeff, t.string));
    else
      it->second.first += t.coeff;
  }
  PauliSum out(length_);
  for (const auto& [word, entry] : merged)
    if (std::abs(entry.first) > cutoff) out.terms_.push_back({entry.first, entry.second});
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [tol](const PauliTerm& t) { return std::abs(t.coeff.imag()) <= tol; });
}

bool PauliSum::is_diagonal() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const PauliTerm& t) { return t.string.is_diagonal(); });
}

PauliSum PauliSum::operator+(const PauliSum& other) const {
  if (length_ != other.length_ && length_ != 0 && other.length_ != 0)
    throw std::invalid_argument("PauliSum length mismatch in +");
  PauliSum out(length_ ? length_ : other.length_);
  for (const auto& t : terms_) out.terms_.push_back(t);
  for (const auto& t : other.terms_) out.terms_.push_back(t);
  return out.normalized();
}

PauliSum PauliSum::operator*(double scale) const {
  PauliSum out(length_);
  for (const auto& t : terms_) out.terms_.push_back({t.coeff * scale, t.string});
  return out;
}

std::string PauliSum::to_lines() const {
  std::ostringstream os;
  for (const auto& t : terms_)
    os << t.coeff.real() << ' ' << t.coeff.imag() << ' ' << t.string.word() << '\n';
  return os.str();
}

PauliSum product(const PauliSum& a, const PauliSum& b) {
  if (a.length() != b.length())
    throw std::invalid_argument("PauliSum length mismatch in product");
  PauliSum out(a.length());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      auto [phase, s] = multiply(ta.string, tb.string);
      out.add(ta.coeff * tb.coeff * phase, s);
    }
  return out.normalized();
}

PauliSum commutator_i(const PauliSum& a, const PauliSum& b) {
  if (a.length() != b.length())
    throw std::invalid_argument("PauliSum length mismatch in commutator_i");
  PauliSum out(a.length());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      auto [pab, sab] = multiply(ta.string, tb.string);
      auto [pba, sba] = multiply(tb.string, ta.string);
      const cplx c = ta.coeff * tb.coeff;
      out.add(cplx{0.0, 1.0} * c * pab, sab);
      out.add(cplx{0.0, -1.0} * c * pba, sba);
    }
  return out.normalized();
}

}  // namespace annni
