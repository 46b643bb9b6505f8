#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "statevector.hpp"

namespace fermiq {

/**
 * Energy window [e_min, e_max) for phase estimation. The evolution time is
 * t0 = 2*pi/omega with omega = e_max - e_min, and the shift e_shift must
 * place K = (e_shift - e_min)/omega on an integer. A measured phase
 * phi = (E - e_min)/omega in [0,1) decodes via omega*(phi - K) + e_shift.
 */
struct EnergyWindow {
  double e_min = 0;
  double e_max = 1;
  double e_shift = 0;

  double omega() const { return e_max - e_min; }
  double t0() const;
  double K() const { return (e_shift - e_min) / omega(); }
};

/// Validates e_min < e_max and integral K (to 1e-9).
EnergyWindow make_window(double e_min, double e_max, double e_shift);

/// Coefficient 1-norm bound: [-|c|_1 - margin, +|c|_1 + margin) with
/// e_shift = e_min (K = 0). Contains the full spectrum strictly.
EnergyWindow default_window(const PauliSum& h, double margin = 0.5);

/// Measured bit stream j_0..j_{L-1} plus its conversion context.
struct PhaseRecord {
  std::vector<int> bits;
  EnergyWindow window;

  int length() const { return static_cast<int>(bits.size()); }
  /// phi = sum_k j_k 2^{-(k+1)}
  double phi() const;
};

double phase_to_energy(const PhaseRecord& r);
/// Inverse of phase_to_energy on [e_min, e_max): phi = (E - e_min)/omega.
double encode_phase(double energy, const EnergyWindow& w);

/**
 * The counter-rotation for bit k given the already-measured lower bits
 * j_{k+1}..j_{L-1}: Tphase(-2*pi*tail) on the register, where
 * tail = sum_{l=2}^{L-k} j_{k+l-1}/2^l. Removes the lower-bit contribution
 * so the register phase reduces to exp(-i*pi*j_k).
 */
Gate s_gate(int k, const std::vector<int>& bits, int length,
            int register_qubit);

/**
 * Supplier of register-controlled propagator powers. apply() advances the
 * joint state (system qubits 1..n, register qubit n+1) by
 * controlled-U(2^k t0).
 */
class ControlledPowerProvider {
 public:
  virtual ~ControlledPowerProvider() = default;
  virtual void apply(StateVector& joint, int k) const = 0;
  virtual int system_qubits() const = 0;
};

/// Exact eigendecomposition-backed U(2^k t0) (oracle path).
std::unique_ptr<ControlledPowerProvider> make_exact_provider(
    const PauliSum& h, const EnergyWindow& w);

/// Honest gate stream: the register-controlled Trotter compilation of
/// U(t0), repeated 2^k times.
std::unique_ptr<ControlledPowerProvider> make_circuit_provider(
    const GroupedHamiltonian& g, const EnergyWindow& w, double dt, int order);

/// Synthetic one-qubit controlled-Tphase(2*pi*phi); `scaled` multiplies the
/// angle by 2^k, otherwise the gate is repeated 2^k times. Test fixture for
/// provider equivalence and exact-expansion determinism.
std::unique_ptr<ControlledPowerProvider> make_synthetic_provider(double phi,
                                                                 bool scaled);

struct IpeaResult {
  PhaseRecord record;
  double phase = 0;
  double energy = 0;
  StateVector system_state;  // post-measurement (collapsed) system state
};

/**
 * Iterative phase estimation: bits measured least-significant first
 * (k = L-1 down to 0), each via H, controlled-U^{2^k}, the e_shift register
 * phase, S_k, H, and a seeded Born-rule Z measurement; the register is reset
 * to |0> between iterations and the system keeps its collapsed state.
 */
IpeaResult ipea_run(const ControlledPowerProvider& provider,
                    const StateVector& eigenstate, int bit_count,
                    const EnergyWindow& window, std::uint64_t seed);

/// Interpolation H(s) = (1-s) H_diag + s H, where H_diag is the
/// computational-basis diagonal part of H. s in [0, 1].
PauliSum build_path(const PauliSum& h_fci, double s);

struct AdiabaticSchedule {
  double total_time = 0;  // atomic units
  int steps = 1;
  double s_at(int k) const { return static_cast<double>(k) / steps; }
};

struct AspTraceRow {
  double s;
  double overlap;  // |<psi0_target | psi(s)>|^2
  double gap;      // E1(s) - E0(s)
  bool degenerate; // gap <= 1e-12
};

enum class AspMode { Oracle, Circuit };

struct AspResult {
  StateVector final_state;
  std::vector<AspTraceRow> trace;
  double min_gap = 0;
  double final_overlap = 0;
};

/**
 * Piecewise-constant adiabatic evolution from the diagonal-part ground state
 * (a computational basis state) toward the ground state of h_fci, sampling
 * H at midpoints s = (k+1/2)/steps. Oracle mode applies exact propagators;
 * Circuit mode runs first-order Trotter circuits with inner step dt_inner.
 */
AspResult adiabatic_evolve(const PauliSum& h_fci,
                           const AdiabaticSchedule& schedule, AspMode mode,
                           double dt_inner = 0.05);

/// Ground basis state of the diagonal part (lowest diagonal entry, ties to
/// the lowest index).
std::uint64_t diagonal_ground_index(const PauliSum& h_diag);

}  // namespace fermiq
