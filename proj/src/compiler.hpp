#pragma once

#include "circuit.hpp"
#include "fermion.hpp"

namespace fermiq {

/// CNOT ladder + Rz(theta) + reversed ladder implementing
/// exp(-i (theta/2) Z(x)...(x)Z) on the listed qubits (ascending ladder,
/// rotation on the last qubit). Throws on duplicates or an empty list.
Circuit emit_zstring(const std::vector<int>& qubits, double theta, int n);

/// Basis changes + ladder + Rz block implementing exp(-i coef * dt * P)
/// exactly for one Pauli string (X via Hadamard, Y via the Ybasis pair; the
/// rotation angle absorbs the (-1)^{#Y} conjugation sign). An identity
/// string becomes a GlobalPhase gate.
void emit_pauli_block(Circuit& c, const PauliString& p, double coef,
                      double dt);

/**
 * Circuit for exp(-i * h_term * dt) of one operator class, where
 * theta = h * dt is the integral-times-time product; the emitter derives
 * each gate angle.  The number class is the single gate Tphase(theta).
 */
Circuit emit_template(TermClass cls, const std::vector<int>& indices,
                      double theta, int n);

/// One canonically-ordered Trotter term, ready for per-slice emission.
struct TrotterTerm {
  enum class Kind { Number, NumberNumber, PauliBlocks };
  Kind kind;
  std::string label;
  // Number payload
  int p = 0;
  double h = 0;
  // NumberNumber payload
  double theta_total = 0;
  std::vector<std::pair<int, double>> z_rates;              // (p, theta_p)
  std::vector<std::tuple<int, int, double>> zz_weights;     // (p, q, eta_pq)
  // PauliBlocks payload (ordered)
  std::vector<std::pair<PauliString, double>> blocks;
};

/// Canonical slice order: constant shift, number terms ascending, the
/// number-number block, number-excitation, excitation, then double-
/// excitation families per ascending quadruple.
std::vector<TrotterTerm> trotter_terms(const GroupedHamiltonian& g);

/// The Hermitian Pauli operator a term contributes (test oracle hook).
PauliSum term_operator(const TrotterTerm& t, int n);

void emit_term(Circuit& c, const TrotterTerm& t, double dt);

/**
 * Trotter compilation of exp(-i H t): floor(t/dt) full slices plus a
 * remainder slice. Order 1 emits each slice in canonical term order; order 2
 * emits the palindromic half-step sequence (all but the last term at dt/2,
 * the last at dt, then the reverse at dt/2).
 */
Circuit trotter_compile(const GroupedHamiltonian& g, double t, double dt,
                        int order);

/// First-order Trotter circuit of a bare Pauli operator (term per string in
/// canonical sum order); used for path-Hamiltonian evolution.
Circuit compile_pauli_evolution(const PauliSum& h, double t, double dt);

/**
 * Register-controlled variant: every Rz and Tphase gains control = register,
 * every GlobalPhase becomes Tphase on the register; basis changes and CNOTs
 * are unchanged. The result acts as |0><0| (x) I + |1><1| (x) U.
 */
Circuit controlize(const Circuit& c, int register_qubit);

/**
 * The hand-scheduled single-slice controlled propagator for the bundled
 * four-orbital system (register = qubit 5): cPhase single-electron block,
 * the theta/eta number-number block, then the four two-electron basis
 * blocks. Gate parameters carry symbolic expression strings.
 */
Circuit emit_h2_program(const IntegralTable& t, double dt);

}  // namespace fermiq
