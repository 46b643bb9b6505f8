#include "pauli.hpp"

#include <bit>
#include <cstdlib>
#include <sstream>

namespace fermiq {

int qubit_cap() {
  if (const char* env = std::getenv("QSIM_QUBIT_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0 && v <= 30) return static_cast<int>(v);
  }
  return 12;
}

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
  }
  throw ContractError(std::string("invalid Pauli letter '") + c + "'");
}

namespace {

void check_n(int n) {
  if (n < 1 || n > 64)
    throw DimensionError("qubit count must be in 1..64, got " +
                         std::to_string(n));
}

// (x, z) pair per letter: I(0,0) X(1,0) Y(1,1) Z(0,1)
inline std::uint64_t x_bit(Pauli p) {
  return (p == Pauli::X || p == Pauli::Y) ? 1 : 0;
}
inline std::uint64_t z_bit(Pauli p) {
  return (p == Pauli::Z || p == Pauli::Y) ? 1 : 0;
}
inline Pauli letter_from_bits(std::uint64_t x, std::uint64_t z) {
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

// phase exponent table: sigma^a sigma^b = i^e sigma^(a xor b), indexed [a][b]
// letters ordered I,X,Y,Z. e.g. X*Y = iZ -> 1, Z*Y = -iX -> 3.
constexpr int kPhaseExp[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

PauliString::PauliString(int n_qubits) : n_(n_qubits) { check_n(n_); }

PauliString::PauliString(const std::string& letters)
    : n_(static_cast<int>(letters.size())) {
  check_n(n_);
  for (int q = 1; q <= n_; ++q) {
    Pauli p = pauli_from_char(letters[static_cast<std::size_t>(q - 1)]);
    x_ |= x_bit(p) << (q - 1);
    z_ |= z_bit(p) << (q - 1);
  }
}

PauliString::PauliString(int n_qubits, int q, Pauli letter) : n_(n_qubits) {
  check_n(n_);
  if (q < 1 || q > n_)
    throw DimensionError("qubit index " + std::to_string(q) +
                         " out of range 1.." + std::to_string(n_));
  x_ = x_bit(letter) << (q - 1);
  z_ = z_bit(letter) << (q - 1);
}

Pauli PauliString::letter(int q) const {
  if (q < 1 || q > n_)
    throw DimensionError("qubit index " + std::to_string(q) +
                         " out of range 1.." + std::to_string(n_));
  return letter_from_bits((x_ >> (q - 1)) & 1, (z_ >> (q - 1)) & 1);
}

PauliString PauliString::with_letter(int q, Pauli p) const {
  if (q < 1 || q > n_)
    throw DimensionError("qubit index out of range");
  PauliString out = *this;
  std::uint64_t m = std::uint64_t{1} << (q - 1);
  out.x_ = (out.x_ & ~m) | (x_bit(p) << (q - 1));
  out.z_ = (out.z_ & ~m) | (z_bit(p) << (q - 1));
  return out;
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

int PauliString::y_count() const { return std::popcount(x_ & z_); }

std::vector<int> PauliString::support() const {
  std::vector<int> out;
  std::uint64_t m = x_ | z_;
  for (int q = 1; q <= n_; ++q)
    if ((m >> (q - 1)) & 1) out.push_back(q);
  return out;
}

std::string PauliString::to_string() const {
  std::string s(static_cast<std::size_t>(n_), 'I');
  for (int q = 1; q <= n_; ++q) s[static_cast<std::size_t>(q - 1)] = pauli_char(letter(q));
  return s;
}

bool PauliString::operator<(const PauliString& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (int q = 1; q <= n_; ++q) {
    auto a = static_cast<int>(letter(q)), b = static_cast<int>(o.letter(q));
    if (a != b) return a < b;
  }
  return false;
}

void PauliString::basis_action(std::uint64_t col, std::uint64_t& row,
                               Complex& phase) const {
  // Qubit q occupies index bit (n - q): qubit 1 is the most significant bit.
  row = col;
  phase = Complex(1, 0);
  for (int q = 1; q <= n_; ++q) {
    std::uint64_t xq = (x_ >> (q - 1)) & 1, zq = (z_ >> (q - 1)) & 1;
    if (!(xq | zq)) continue;
    std::uint64_t pos = std::uint64_t{1} << (n_ - q);
    bool bit = (col & pos) != 0;
    if (xq && zq) {  // Y|b> = i(-1)^b |1-b>
      row ^= pos;
      phase *= bit ? Complex(0, -1) : Complex(0, 1);
    } else if (xq) {
      row ^= pos;
    } else if (bit) {  // Z
      phase = -phase;
    }
  }
}

std::pair<Complex, PauliString> pauli_mul(const PauliString& a,
                                          const PauliString& b) {
  if (a.n_ != b.n_)
    throw DimensionError("pauli_mul: operand sizes differ (" +
                         std::to_string(a.n_) + " vs " + std::to_string(b.n_) +
                         ")");
  PauliString out(a.n_);
  out.x_ = a.x_ ^ b.x_;
  out.z_ = a.z_ ^ b.z_;
  int e = 0;
  std::uint64_t any = (a.x_ | a.z_) & (b.x_ | b.z_);
  for (int q = 1; q <= a.n_; ++q) {
    if (!((any >> (q - 1)) & 1)) continue;
    e += kPhaseExp[static_cast<int>(a.letter(q))][static_cast<int>(b.letter(q))];
  }
  return {kIPow[e & 3], out};
}

PauliSum::PauliSum(int n_qubits) : n_(n_qubits) { check_n(n_); }

PauliSum PauliSum::identity(int n_qubits, Complex coefficient) {
  PauliSum s(n_qubits);
  s.add_term(PauliString(n_qubits), coefficient);
  return s;
}

Complex PauliSum::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Complex(0, 0) : it->second;
}

void PauliSum::add_term(const PauliString& s, Complex c) {
  if (s.n_qubits() != n_)
    throw DimensionError("add_term: string size " +
                         std::to_string(s.n_qubits()) + " != sum size " +
                         std::to_string(n_));
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kCoefficientEps) terms_.erase(it);
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
  if (o.n_ != n_) throw DimensionError("sum_add: qubit counts differ");
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& o) {
  if (o.n_ != n_) throw DimensionError("sum_sub: qubit counts differ");
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(Complex c) {
  if (std::abs(c) < kCoefficientEps) {
    terms_.clear();
    return *this;
  }
  std::map<PauliString, Complex> scaled;
  for (const auto& [s, v] : terms_) {
    Complex w = v * c;
    if (std::abs(w) >= kCoefficientEps) scaled.emplace(s, w);
  }
  terms_ = std::move(scaled);
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_ != b.n_) throw DimensionError("sum_mul: qubit counts differ");
  PauliSum out(a.n_);
  for (const auto& [sa, ca] : a.terms_)
    for (const auto& [sb, cb] : b.terms_) {
      auto [phase, s] = pauli_mul(sa, sb);
      out.add_term(s, ca * cb * phase);
    }
  return out;
}

bool PauliSum::operator==(const PauliSum& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_);
  for (const auto& [s, c] : terms_) out.add_term(s, std::conj(c));
  return out;
}

PauliSum PauliSum::diagonal_part() const {
  PauliSum out(n_);
  for (const auto& [s, c] : terms_)
    if (s.is_diagonal()) out.add_term(s, c);
  return out;
}

double PauliSum::one_norm() const {
  double v = 0;
  for (const auto& [s, c] : terms_) v += std::abs(c);
  return v;
}

double PauliSum::max_imag() const {
  double v = 0;
  for (const auto& [s, c] : terms_) v = std::max(v, std::abs(c.imag()));
  return v;
}

bool PauliSum::is_hermitian(double tol) const { return max_imag() <= tol; }

Matrix PauliSum::to_matrix() const {
  if (n_ > qubit_cap())
    throw ResourceError("to_matrix: " + std::to_string(n_) +
                        " qubits exceeds dense cap " +
                        std::to_string(qubit_cap()));
  std::uint64_t dim = std::uint64_t{1} << n_;
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim),
                          static_cast<Eigen::Index>(dim));
  for (const auto& [s, c] : terms_) {
    for (std::uint64_t col = 0; col < dim; ++col) {
      std::uint64_t row;
      Complex phase;
      s.basis_action(col, row, phase);
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
          c * phase;
    }
  }
  return m;
}

std::string PauliSum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real();
    if (c.imag() != 0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
    os << ")*" << s.to_string();
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace fermiq
