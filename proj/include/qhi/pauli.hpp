#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qhi/errors.hpp"

namespace qhi {

using Complex = std::complex<double>;

/// Single-qubit Pauli letter. The numeric codes index the phase table below.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

/// An n-qubit tensor product of {I, X, Y, Z}. Qubit 1 is the leftmost letter
/// in the word form ("ZI" is Z on qubit 1). Stored as a symplectic bit pair
/// per qubit so products are O(n) table lookups.
class PauliString {
 public:
  static constexpr int kMaxQubits = 10;

  explicit PauliString(int n) : n_(n), x_(0), z_(0) { check_n(n); }

  static PauliString identity(int n) { return PauliString(n); }

  /// Parse an uppercase letter word, e.g. "IX", "ZZI".
  static PauliString from_string(std::string_view word) {
    PauliString s(static_cast<int>(word.size()));
    for (int k = 0; k < s.n_; ++k) {
      switch (word[static_cast<std::size_t>(k)]) {
        case 'I': break;
        case 'X': s.set_letter(k, Pauli::X); break;
        case 'Y': s.set_letter(k, Pauli::Y); break;
        case 'Z': s.set_letter(k, Pauli::Z); break;
        default:
          throw ValidationError("invalid Pauli letter in \"" + std::string(word) + "\"");
      }
    }
    return s;
  }

  /// String with letter `p` on one qubit (0-based index), identity elsewhere.
  static PauliString single(int n, int qubit, Pauli p) {
    PauliString s(n);
    if (qubit < 0 || qubit >= n) throw ValidationError("qubit index out of range");
    s.set_letter(qubit, p);
    return s;
  }

  int n() const { return n_; }

  Pauli letter(int k) const {
    return code_from_bits((x_ >> k) & 1, (z_ >> k) & 1);
  }

  void set_letter(int k, Pauli p) {
    const auto [x, z] = bits_from_code(p);
    x_ = static_cast<std::uint16_t>((x_ & ~(1u << k)) | (x << k));
    z_ = static_cast<std::uint16_t>((z_ & ~(1u << k)) | (z << k));
  }

  bool is_identity() const { return x_ == 0 && z_ == 0; }

  /// Number of non-identity letters.
  int weight() const {
    int w = 0;
    for (int k = 0; k < n_; ++k) w += (((x_ | z_) >> k) & 1);
    return w;
  }

  std::string str() const {
    std::string out(static_cast<std::size_t>(n_), 'I');
    for (int k = 0; k < n_; ++k) out[static_cast<std::size_t>(k)] = pauli_char(letter(k));
    return out;
  }

  /// Dense 2^n x 2^n matrix (Kronecker product of single-qubit matrices).
  Eigen::MatrixXcd to_dense() const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_;
  }

  /// Lexicographic on letters (I < X < Y < Z), qubit 1 most significant.
  friend bool operator<(const PauliString& a, const PauliString& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (int k = 0; k < a.n_; ++k) {
      const auto la = a.letter(k), lb = b.letter(k);
      if (la != lb) return la < lb;
    }
    return false;
  }

 private:
  static void check_n(int n) {
    if (n < 1) throw ValidationError("PauliString needs at least one qubit");
    if (n > kMaxQubits)
      throw CapacityError("PauliString supports at most " + std::to_string(kMaxQubits) + " qubits");
  }

  static Pauli code_from_bits(int x, int z) {
    // (x,z): I=(0,0) X=(1,0) Y=(1,1) Z=(0,1)
    static constexpr Pauli table[2][2] = {{Pauli::I, Pauli::Z}, {Pauli::X, Pauli::Y}};
    return table[x][z];
  }

  static std::pair<std::uint32_t, std::uint32_t> bits_from_code(Pauli p) {
    switch (p) {
      case Pauli::I: return {0, 0};
      case Pauli::X: return {1, 0};
      case Pauli::Y: return {1, 1};
      case Pauli::Z: return {0, 1};
    }
    return {0, 0};
  }

  friend class PhaseFactor;
  friend struct PhasedString;
  friend PhasedString multiply(const PauliString&, const PauliString&);

  int n_;
  std::uint16_t x_, z_;
};

/// Phase restricted to the fourth roots of unity, stored as the exponent k in i^k.
class PhaseFactor {
 public:
  PhaseFactor() : k_(0) {}
  static PhaseFactor from_exponent(int k) { return PhaseFactor(((k % 4) + 4) % 4); }

  int exponent() const { return k_; }
  Complex value() const {
    static constexpr Complex v[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return v[k_];
  }

  PhaseFactor operator*(PhaseFactor o) const { return from_exponent(k_ + o.k_); }
  friend bool operator==(PhaseFactor a, PhaseFactor b) { return a.k_ == b.k_; }

 private:
  explicit PhaseFactor(int k) : k_(k) {}
  int k_;
};

/// Product of two Pauli strings: exactly one string with a quartic phase.
struct PhasedString {
  PhaseFactor phase;
  PauliString string;
};

/// Exact product a*b with accumulated per-qubit phase.
inline PhasedString multiply(const PauliString& a, const PauliString& b) {
  if (a.n() != b.n()) throw DimensionError("Pauli product on mismatched qubit counts");
  // Phase exponent of the single-qubit product, indexed [a][b] with I,X,Y,Z = 0..3:
  //   X*Y = iZ, Y*Z = iX, Z*X = iY and conjugates.
  static constexpr std::uint8_t kPhase[4][4] = {
      {0, 0, 0, 0},
      {0, 0, 1, 3},
      {0, 3, 0, 1},
      {0, 1, 3, 0},
  };
  int k = 0;
  for (int q = 0; q < a.n(); ++q)
    k += kPhase[static_cast<int>(a.letter(q))][static_cast<int>(b.letter(q))];
  PauliString prod(a.n());
  prod.x_ = a.x_ ^ b.x_;
  prod.z_ = a.z_ ^ b.z_;
  return {PhaseFactor::from_exponent(k), prod};
}

/// Real-coefficient combination of Pauli strings. Commutators i[g,h] of
/// Hermitian strings expand with real coefficients, so this is closed under
/// everything the reduction needs. Zero coefficients are never retained.
class WeightedSum {
 public:
  WeightedSum() = default;

  void add(const PauliString& s, double coeff) {
    if (coeff == 0.0) return;
    auto [it, inserted] = terms_.try_emplace(s, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0.0) terms_.erase(it);
    }
  }

  double coefficient(const PauliString& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0.0 : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const WeightedSum& a, const WeightedSum& b) {
    return a.terms_ == b.terms_;
  }

  WeightedSum operator-() const {
    WeightedSum out;
    for (const auto& [s, c] : terms_) out.add(s, -c);
    return out;
  }

  /// Dense rendering, for oracles and the simulator.
  Eigen::MatrixXcd to_dense(int n) const {
    const auto dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [s, c] : terms_) {
      if (s.n() != n) throw DimensionError("WeightedSum term has wrong qubit count");
      out += c * s.to_dense();
    }
    return out;
  }

 private:
  std::map<PauliString, double> terms_;
};

/// Pauli expansion of i[m, k]. The stored coefficient of X_l equals
/// Tr{i X_l [m, k]} / 2^n, which is -2 or +2 when the strings anticommute and
/// the sum is empty when they commute.
inline WeightedSum expand_commutator(const PauliString& m, const PauliString& k) {
  if (m.n() != k.n()) throw DimensionError("commutator on mismatched qubit counts");
  const PhasedString mk = multiply(m, k);
  // [m,k] = (phi - phi*) P with phi = i^e; Hermitian strings anticommute iff e is odd,
  // and then i(phi - phi*) = i*2*phi = -2 (e=1) or +2 (e=3).
  const int e = mk.phase.exponent();
  WeightedSum out;
  if (e == 1) out.add(mk.string, -2.0);
  if (e == 3) out.add(mk.string, +2.0);
  return out;
}

inline Eigen::MatrixXcd PauliString::to_dense() const {
  static const Eigen::Matrix2cd kSigma[4] = {
      (Eigen::Matrix2cd() << 1, 0, 0, 1).finished(),
      (Eigen::Matrix2cd() << 0, 1, 1, 0).finished(),
      (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
      (Eigen::Matrix2cd() << 1, 0, 0, -1).finished(),
  };
  // Build right-to-left so qubit 1 ends up as the most significant factor.
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
  for (int k = n_ - 1; k >= 0; --k) {
    const Eigen::Matrix2cd& s = kSigma[static_cast<int>(letter(k))];
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    next.topLeftCorner(out.rows(), out.cols()) = s(0, 0) * out;
    next.topRightCorner(out.rows(), out.cols()) = s(0, 1) * out;
    next.bottomLeftCorner(out.rows(), out.cols()) = s(1, 0) * out;
    next.bottomRightCorner(out.rows(), out.cols()) = s(1, 1) * out;
    out.swap(next);
  }
  return out;
}

}  // namespace qhi
