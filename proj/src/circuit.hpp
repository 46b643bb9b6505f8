#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pauli.hpp"

namespace fermiq {

enum class GateKind : std::uint8_t {
  Hadamard,
  Ybasis,         // R_x(-pi/2), z-basis -> y-basis change
  YbasisDagger,   // R_x(+pi/2)
  Rx,
  Rz,
  Tphase,         // diag(1, e^{-i theta})
  GlobalPhase,    // e^{-i phi} * I
  Cnot,
};

std::string gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);
bool gate_kind_has_param(GateKind k);

/// One gate. Any kind may carry a single control qubit. GlobalPhase has no
/// meaningful target; by convention its target is 0.
struct Gate {
  GateKind kind;
  int target = 0;
  std::optional<int> control;
  double param = 0.0;

  bool operator==(const Gate& o) const = default;
};

Gate hadamard(int target);
Gate ybasis(int target);
Gate ybasis_dagger(int target);
Gate rx(int target, double theta);
Gate rz(int target, double theta);
Gate tphase(int target, double theta);
Gate global_phase(double phi);
Gate cnot(int control, int target);

/// Local matrix realization: 2x2, or 4x4 for a controlled gate
/// (|0><0| (x) I + |1><1| (x) U, control is the first tensor factor).
/// An uncontrolled GlobalPhase yields e^{-i phi} * I_2.
Matrix gate_matrix(const Gate& g);

/// The gate embedded in the full 2^n space (qubit 1 leftmost).
Matrix embed_gate(int n_qubits, const Gate& g);

/**
 * Ordered gate list on n qubits. Gates apply left to right; the composite
 * matrix is the reversed product of embeddings. Immutable by convention once
 * emitted by a compiler pass.
 */
class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t gate_count() const { return gates_.size(); }

  void append(const Gate& g);
  void append(const Gate& g, const std::string& param_expr);
  void extend(const Circuit& other);

  /// Parameter expressions aligned with gates() (empty when untracked).
  const std::vector<std::string>& param_exprs() const { return param_exprs_; }

  std::map<std::string, std::string>& metadata() { return metadata_; }
  const std::map<std::string, std::string>& metadata() const {
    return metadata_;
  }

  /// Dense composite matrix via gate embeddings (independent of the
  /// statevector engine). Subject to the dense qubit cap.
  Matrix to_matrix() const;

  bool operator==(const Circuit& o) const {
    return n_ == o.n_ && gates_ == o.gates_;
  }

 private:
  void check_gate(const Gate& g) const;

  int n_;
  std::vector<Gate> gates_;
  std::vector<std::string> param_exprs_;
  std::map<std::string, std::string> metadata_;
};

/// max-norm of (U^dag U - I); small for any well-formed circuit.
double unitarity_defect(const Matrix& u);

std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);
void save_circuit(const Circuit& c, const std::string& path);
Circuit load_circuit(const std::string& path);

}  // namespace fermiq
