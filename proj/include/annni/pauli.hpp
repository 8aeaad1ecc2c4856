#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace annni {

using cplx = std::complex<double>;

enum class PauliOp : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Tensor product of single-site Pauli operators on an L-site chain,
/// stored as two bitmasks. Site j occupies bit (L-1-j), matching the
/// computational-basis index convention (site 0 = most significant bit).
class PauliString {
public:
  explicit PauliString(int length);
  /// Parse a word like "XIZY" (site 0 first).
  static PauliString from_word(const std::string& word);

  int length() const { return length_; }
  PauliOp op(int site) const;
  void set_op(int site, PauliOp op);

  uint64_t x_mask() const { return x_mask_; }
  uint64_t z_mask() const { return z_mask_; }

  bool is_identity() const { return x_mask_ == 0 && z_mask_ == 0; }
  bool is_diagonal() const { return x_mask_ == 0; }

  /// Number of sites carrying a Y operator.
  int y_count() const;

  /// "IXYZ" word, site 0 first. Doubles as the lexicographic sort key.
  std::string word() const;

  bool operator==(const PauliString& other) const = default;
  auto operator<=>(const PauliString& other) const = default;

private:
  int length_ = 0;
  uint64_t x_mask_ = 0;
  uint64_t z_mask_ = 0;
};

/// Site-wise product a*b. Returns the accumulated phase (one of +-1, +-i)
/// and the product string. Throws std::invalid_argument on length mismatch.
std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b);

struct PauliTerm {
  cplx coeff;
  PauliString string;
};

/// Weighted sum of Pauli strings with merged, deterministically ordered terms.
class PauliSum {
public:
  static constexpr double kCoeffCutoff = 1e-12;

  PauliSum() = default;
  explicit PauliSum(int length) : length_(length) {}
  PauliSum(int length, std::vector<PauliTerm> terms);

  int length() const { return length_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(cplx coeff, const PauliString& s);

  /// Merge duplicate strings, drop coefficients below the cutoff, sort
  /// lexicographically by Pauli word. Idempotent.
  PauliSum normalized(double cutoff = kCoeffCutoff) const;

  /// True when every coefficient is real within the cutoff.
  bool is_hermitian(double tol = kCoeffCutoff) const;

  /// True when every term is built from I and Z only.
  bool is_diagonal() const;

  PauliSum operator+(const PauliSum& other) const;
  PauliSum operator*(double scale) const;

  /// Line-per-term dump: "coeff_re coeff_im pauli_word". Debug aid, not a
  /// stability contract.
  std::string to_lines() const;

private:
  int length_ = 0;
  std::vector<PauliTerm> terms_;
};

/// i*(ab - ba), normalized. Real coefficients whenever a and b are Hermitian.
PauliSum commutator_i(const PauliSum& a, const PauliSum& b);

/// Plain product ab, normalized.
PauliSum product(const PauliSum& a, const PauliSum& b);

}  // namespace annni
