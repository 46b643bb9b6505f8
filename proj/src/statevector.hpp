#pragma once

#include "circuit.hpp"
#include "fermion.hpp"
#include "pauli.hpp"

namespace fermiq {

/**
 * Dense 2^n amplitude vector. apply_* members mutate in place; the free
 * functions below provide the value-semantics API. A state is confined to
 * one execution context during a run.
 */
class StateVector {
 public:
  explicit StateVector(int n_qubits);  // |00...0>
  StateVector(int n_qubits, Vector amplitudes);

  static StateVector basis_state(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_; }
  const Vector& amplitudes() const { return a_; }
  Vector& amplitudes() { return a_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_; }

  double norm() const { return a_.norm(); }
  void normalize();
  Complex inner(const StateVector& o) const;  // <this|o>

  /// <n_p> occupation expectation of qubit p.
  double occupation(int p) const;
  /// Sum of occupations.
  double total_occupation() const;

  void apply_gate_inplace(const Gate& g);
  void apply_circuit_inplace(const Circuit& c);
  /// psi <- U psi on the given qubits==all (dense matrix application).
  void apply_matrix_inplace(const Matrix& u);
  /// psi <- (|0><0| (x) I + |1><1| (x) U) psi with the control qubit given.
  void apply_controlled_matrix_inplace(const Matrix& u, int control);

 private:
  int n_;
  Vector a_;
};

StateVector apply_gate(const StateVector& s, const Gate& g);
StateVector run_circuit(const StateVector& s, const Circuit& c);

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending
  Matrix eigenvectors;          // orthonormal columns
  StateVector eigenstate(int k, int n_qubits) const;
};

/// Dense eigendecomposition oracle. Throws ContractError for non-Hermitian
/// input and ResourceError past the qubit cap.
SpectralDecomposition diagonalize(const PauliSum& h);

/// V e^{-i lambda t} V^dag from the spectral decomposition.
Matrix exact_propagator(const PauliSum& h, double t);
Matrix exact_propagator(const SpectralDecomposition& d, double t);

enum class TrotterMetric { OperatorNorm, GroundEnergy };

/**
 * Trotter-approximation error of the compiled circuit for exp(-i H t),
 * H = lower_grouped(g):
 *   OperatorNorm: max singular value of U_circuit - U_exact,
 *   GroundEnergy: |arg(<psi0|U_circuit|psi0>)/(-t) - E0| for the exact
 *   ground state psi0 (valid while |E0 t| < pi).
 */
double trotter_error(const GroupedHamiltonian& g, double t, double dt,
                     int order, TrotterMetric metric);

/// Composite circuit matrix computed as slice-matrix powers; equal to
/// Circuit::to_matrix() of the full compilation but cheaper for many slices.
Matrix compiled_propagator_matrix(const GroupedHamiltonian& g, double t,
                                  double dt, int order);

}  // namespace fermiq
