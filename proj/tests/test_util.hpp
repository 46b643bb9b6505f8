#pragma once

#include <complex>
#include <random>
#include <string>

#include "circuit.hpp"
#include "fermion.hpp"
#include "pauli.hpp"

#ifndef FERMIQ_DATA_DIR
#define FERMIQ_DATA_DIR "."
#endif

namespace fermiq::test {

inline std::string data_path(const std::string& name) {
  return std::string(FERMIQ_DATA_DIR) + "/" + name;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline bool matrices_close(const Matrix& a, const Matrix& b,
                           double tol = 1e-12) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         max_abs_diff(a, b) <= tol;
}

/// Largest coefficient difference between two canonical sums (considering
/// strings present in either).
inline double sum_distance(const PauliSum& a, const PauliSum& b) {
  double d = 0;
  for (const auto& [s, c] : a.terms()) d = std::max(d, std::abs(c - b.coefficient(s)));
  for (const auto& [s, c] : b.terms()) d = std::max(d, std::abs(c - a.coefficient(s)));
  return d;
}

inline PauliString random_string(std::mt19937_64& rng, int n) {
  PauliString s(n);
  for (int q = 1; q <= n; ++q) {
    auto letter = static_cast<Pauli>(rng() % 4);
    s = s.with_letter(q, letter);
  }
  return s;
}

inline PauliSum random_sum(std::mt19937_64& rng, int n, int terms) {
  PauliSum out(n);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int k = 0; k < terms; ++k)
    out.add_term(random_string(rng, n), Complex(coef(rng), coef(rng)));
  return out;
}

inline Complex random_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng)};
}

/// Dense matrix of a single JW-lowered ladder operator (annihilator by
/// default), built directly from sigma matrices: the matrix-level oracle.
Matrix ladder_matrix_oracle(int orbital, bool create, int n);

/// Matrix exponential exp(-i * H * t) via a self-adjoint eigensolve;
/// declared here, defined in test_support.cpp.
Matrix expm_minus_i(const Matrix& h, double t);

}  // namespace fermiq::test
