#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"

namespace fermiq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Coefficients with magnitude below this are dropped during canonicalization.
inline constexpr double kCoefficientEps = 1e-14;

/// Dense-matrix qubit cap. Reads QSIM_QUBIT_CAP from the environment,
/// defaulting to 12.
int qubit_cap();

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/**
 * Tensor product of single-qubit Pauli operators on qubits 1..n.
 *
 * Qubit 1 is the leftmost tensor factor; basis index bit ordering follows
 * (qubit 1 = most significant bit). Immutable after construction.
 */
class PauliString {
 public:
  /// All-identity string (the multiplicative unit).
  explicit PauliString(int n_qubits);
  /// From letters, e.g. "XZYI" puts X on qubit 1. Length fixes n_qubits.
  explicit PauliString(const std::string& letters);
  /// Identity except `letter` on qubit `q` (1-based).
  PauliString(int n_qubits, int q, Pauli letter);

  int n_qubits() const { return n_; }
  Pauli letter(int q) const;
  PauliString with_letter(int q, Pauli letter) const;

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  /// True when every letter is I or Z.
  bool is_diagonal() const { return x_ == 0; }
  int weight() const;
  int y_count() const;
  /// Ascending list of qubits with a non-identity letter.
  std::vector<int> support() const;

  std::string to_string() const;

  bool operator==(const PauliString& o) const {
    return n_ == o.n_ && x_ == o.x_ && z_ == o.z_;
  }
  /// Lexicographic by letter codes (I<X<Y<Z) from qubit 1; shorter first.
  bool operator<(const PauliString& o) const;

  /// Action on a computational basis state: S|col> = phase * |row>.
  /// Exact (phase is a power of i).
  void basis_action(std::uint64_t col, std::uint64_t& row, Complex& phase) const;

 private:
  int n_;
  std::uint64_t x_ = 0, z_ = 0;  // bit q-1 set => X / Z component on qubit q

  friend std::pair<Complex, PauliString> pauli_mul(const PauliString&,
                                                   const PauliString&);
};

/// Exact product of two Pauli strings: a*b == phase * out with
/// phase in {1, i, -1, -i}.
std::pair<Complex, PauliString> pauli_mul(const PauliString& a,
                                          const PauliString& b);

/**
 * Complex-weighted sum of Pauli strings in canonical form: every string
 * appears at most once and no coefficient magnitude is below
 * kCoefficientEps. Hermitian operators have all-real coefficients.
 */
class PauliSum {
 public:
  explicit PauliSum(int n_qubits);

  static PauliSum identity(int n_qubits, Complex coefficient = 1.0);

  int n_qubits() const { return n_; }
  std::size_t term_count() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::map<PauliString, Complex>& terms() const { return terms_; }

  /// Coefficient of `s` (0 when absent).
  Complex coefficient(const PauliString& s) const;

  /// Adds c * s, re-canonicalizing the touched term.
  void add_term(const PauliString& s, Complex c);

  PauliSum& operator+=(const PauliSum& o);
  PauliSum& operator-=(const PauliSum& o);
  PauliSum& operator*=(Complex c);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(Complex c, PauliSum a) { return a *= c; }

  /// Distributes pauli_mul over all term pairs; result is canonical.
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  bool operator==(const PauliSum& o) const;

  /// Hermitian conjugate (conjugates coefficients; strings are Hermitian).
  PauliSum adjoint() const;
  /// Sub-sum of I/Z-only strings (diagonal in the computational basis).
  PauliSum diagonal_part() const;

  double one_norm() const;
  bool is_hermitian(double tol = 1e-13) const;
  /// Largest |Im c| over terms; 0 for canonically Hermitian sums.
  double max_imag() const;

  /// Dense 2^n matrix realization (oracle). Throws ResourceError past the cap.
  Matrix to_matrix() const;

  std::string to_string() const;

 private:
  int n_;
  std::map<PauliString, Complex> terms_;
};

}  // namespace fermiq
