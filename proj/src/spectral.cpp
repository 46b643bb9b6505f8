#include "spectral.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "compiler.hpp"

namespace fermiq {

namespace {
constexpr double kTwoPi = 2 * std::numbers::pi;

double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace

double EnergyWindow::t0() const { return kTwoPi / omega(); }

EnergyWindow make_window(double e_min, double e_max, double e_shift) {
  if (!(e_min < e_max))
    throw ContractError("energy window requires e_min < e_max");
  EnergyWindow w{e_min, e_max, e_shift};
  double k = w.K();
  if (std::abs(k - std::round(k)) > 1e-9)
    throw ContractError("energy shift does not place K on an integer");
  return w;
}

EnergyWindow default_window(const PauliSum& h, double margin) {
  if (margin < 0) throw ContractError("window margin must be nonnegative");
  double bound = h.one_norm();
  return make_window(-bound - margin, bound + margin, -bound - margin);
}

double PhaseRecord::phi() const {
  double v = 0;
  for (std::size_t k = 0; k < bits.size(); ++k)
    v += bits[k] * std::ldexp(1.0, -static_cast<int>(k) - 1);
  return v;
}

double phase_to_energy(const PhaseRecord& r) {
  const EnergyWindow& w = r.window;
  double e = w.omega() * (r.phi() - w.K()) + w.e_shift;
  // map into [e_min, e_max)
  double span = w.omega();
  while (e < w.e_min) e += span;
  while (e >= w.e_max) e -= span;
  return e;
}

double encode_phase(double energy, const EnergyWindow& w) {
  double phi = (energy - w.e_shift) / w.omega() + w.K();
  phi -= std::floor(phi);
  return phi;
}

Gate s_gate(int k, const std::vector<int>& bits, int length,
            int register_qubit) {
  if (length < 1 || k < 0 || k >= length)
    throw ContractError("s_gate: bit index out of range");
  if (static_cast<int>(bits.size()) < length)
    throw ContractError("s_gate: missing measured bits");
  double tail = 0;
  for (int m = k + 1; m < length; ++m) {
    if (bits[static_cast<std::size_t>(m)] != 0 &&
        bits[static_cast<std::size_t>(m)] != 1)
      throw ContractError("s_gate: bit j_" + std::to_string(m) +
                          " not yet measured");
    tail += bits[static_cast<std::size_t>(m)] * std::ldexp(1.0, k - m - 1);
  }
  return tphase(register_qubit, -kTwoPi * tail);
}

namespace {

class ExactProvider final : public ControlledPowerProvider {
 public:
  ExactProvider(const PauliSum& h, const EnergyWindow& w)
      : n_(h.n_qubits()), t0_(w.t0()), decomp_(diagonalize(h)) {}
  int system_qubits() const override { return n_; }
  void apply(StateVector& joint, int k) const override {
    Matrix u = exact_propagator(decomp_, std::ldexp(t0_, k));
    joint.apply_controlled_matrix_inplace(u, n_ + 1);
  }

 private:
  int n_;
  double t0_;
  SpectralDecomposition decomp_;
};

class CircuitProvider final : public ControlledPowerProvider {
 public:
  CircuitProvider(const GroupedHamiltonian& g, const EnergyWindow& w,
                  double dt, int order)
      : n_(g.n_qubits),
        slice_(controlize(trotter_compile(g, w.t0(), dt, order), g.n_qubits + 1)) {}
  int system_qubits() const override { return n_; }
  void apply(StateVector& joint, int k) const override {
    std::uint64_t reps = std::uint64_t{1} << k;
    for (std::uint64_t i = 0; i < reps; ++i)
      joint.apply_circuit_inplace(slice_);
  }

 private:
  int n_;
  Circuit slice_;
};

class SyntheticProvider final : public ControlledPowerProvider {
 public:
  SyntheticProvider(double phi, bool scaled) : phi_(phi), scaled_(scaled) {}
  int system_qubits() const override { return 1; }
  void apply(StateVector& joint, int k) const override {
    if (scaled_) {
      joint.apply_gate_inplace({GateKind::Tphase, 1, 2,
                                kTwoPi * phi_ * std::ldexp(1.0, k)});
      return;
    }
    std::uint64_t reps = std::uint64_t{1} << k;
    for (std::uint64_t i = 0; i < reps; ++i)
      joint.apply_gate_inplace({GateKind::Tphase, 1, 2, kTwoPi * phi_});
  }

 private:
  double phi_;
  bool scaled_;
};

}  // namespace

std::unique_ptr<ControlledPowerProvider> make_exact_provider(
    const PauliSum& h, const EnergyWindow& w) {
  return std::make_unique<ExactProvider>(h, w);
}

std::unique_ptr<ControlledPowerProvider> make_circuit_provider(
    const GroupedHamiltonian& g, const EnergyWindow& w, double dt, int order) {
  return std::make_unique<CircuitProvider>(g, w, dt, order);
}

std::unique_ptr<ControlledPowerProvider> make_synthetic_provider(double phi,
                                                                 bool scaled) {
  return std::make_unique<SyntheticProvider>(phi, scaled);
}

IpeaResult ipea_run(const ControlledPowerProvider& provider,
                    const StateVector& eigenstate, int bit_count,
                    const EnergyWindow& window, std::uint64_t seed) {
  if (bit_count < 1 || bit_count > 30)
    throw ContractError("ipea_run: bit count must be in 1..30");
  int n = provider.system_qubits();
  if (eigenstate.n_qubits() != n)
    throw DimensionError("ipea_run: input state has wrong qubit count");
  if (std::abs(eigenstate.norm() - 1.0) > 1e-8)
    throw ContractError("ipea_run: input state not normalized");

  int reg = n + 1;  // register is the last (least significant) qubit
  std::mt19937_64 rng(seed);

  // joint = |system> (x) |0>_register
  StateVector joint(reg);
  {
    Vector a = Vector::Zero(static_cast<Eigen::Index>(joint.dim()));
    for (std::uint64_t i = 0; i < eigenstate.dim(); ++i)
      a(static_cast<Eigen::Index>(2 * i)) =
          eigenstate.amplitudes()(static_cast<Eigen::Index>(i));
    joint = StateVector(reg, std::move(a));
  }

  std::vector<int> bits(static_cast<std::size_t>(bit_count), 0);
  double t0 = window.t0();
  for (int k = bit_count - 1; k >= 0; --k) {
    joint.apply_gate_inplace(hadamard(reg));
    provider.apply(joint, k);
    // energy shift: |1> branch gains exp(+i e_shift 2^k t0)
    if (window.e_shift != 0.0)
      joint.apply_gate_inplace(
          tphase(reg, -window.e_shift * std::ldexp(t0, k)));
    joint.apply_gate_inplace(s_gate(k, bits, bit_count, reg));
    joint.apply_gate_inplace(hadamard(reg));

    // Born-rule register measurement, collapse, reset to |0>
    auto& a = joint.amplitudes();
    double p1 = 0;
    for (std::uint64_t i = 1; i < joint.dim(); i += 2)
      p1 += std::norm(a(static_cast<Eigen::Index>(i)));
    int outcome = next_uniform(rng) < p1 ? 1 : 0;
    bits[static_cast<std::size_t>(k)] = outcome;
    double keep = outcome ? p1 : 1.0 - p1;
    if (keep < 1e-300)
      throw ContractError("ipea_run: measured a zero-probability branch");
    double scale = 1.0 / std::sqrt(keep);
    for (std::uint64_t i = 0; i < joint.dim(); i += 2) {
      auto i0 = static_cast<Eigen::Index>(i);
      auto i1 = static_cast<Eigen::Index>(i + 1);
      a(i0) = (outcome ? a(i1) : a(i0)) * scale;
      a(i1) = 0;
    }
  }

  IpeaResult result{PhaseRecord{bits, window}, 0, 0, StateVector(n)};
  result.phase = result.record.phi();
  result.energy = phase_to_energy(result.record);
  Vector sys(static_cast<Eigen::Index>(eigenstate.dim()));
  for (std::uint64_t i = 0; i < eigenstate.dim(); ++i)
    sys(static_cast<Eigen::Index>(i)) =
        joint.amplitudes()(static_cast<Eigen::Index>(2 * i));
  result.system_state = StateVector(n, std::move(sys));
  return result;
}

PauliSum build_path(const PauliSum& h_fci, double s) {
  if (s < 0 || s > 1) throw ContractError("path parameter must be in [0, 1]");
  PauliSum out = h_fci.diagonal_part();
  out *= (1.0 - s);
  PauliSum target = h_fci;
  target *= s;
  out += target;
  return out;
}

std::uint64_t diagonal_ground_index(const PauliSum& h_diag) {
  int n = h_diag.n_qubits();
  std::uint64_t dim = std::uint64_t{1} << n;
  std::uint64_t best = 0;
  double best_e = 0;
  bool first = true;
  for (std::uint64_t i = 0; i < dim; ++i) {
    double e = 0;
    for (const auto& [s, c] : h_diag.terms()) {
      if (!s.is_diagonal())
        throw ContractError("diagonal_ground_index: operator not diagonal");
      std::uint64_t row;
      Complex phase;
      s.basis_action(i, row, phase);
      e += (c * phase).real();
    }
    if (first || e < best_e) {
      best = i;
      best_e = e;
      first = false;
    }
  }
  return best;
}

AspResult adiabatic_evolve(const PauliSum& h_fci,
                           const AdiabaticSchedule& schedule, AspMode mode,
                           double dt_inner) {
  if (schedule.steps < 1) throw ContractError("schedule needs >= 1 step");
  if (schedule.total_time < 0) throw ContractError("negative total time");
  int n = h_fci.n_qubits();

  StateVector psi =
      StateVector::basis_state(n, diagonal_ground_index(h_fci.diagonal_part()));
  StateVector target = diagonalize(h_fci).eigenstate(0, n);

  double dtau = schedule.total_time / schedule.steps;
  AspResult out{StateVector(n), {}, 0, 0};

  auto record = [&](double s) {
    SpectralDecomposition d = diagonalize(build_path(h_fci, s));
    double gap = d.eigenvalues(1) - d.eigenvalues(0);
    double ov = std::norm(target.inner(psi));
    out.trace.push_back({s, ov, gap, gap <= 1e-12});
  };

  record(0.0);
  for (int k = 0; k < schedule.steps; ++k) {
    double s_mid = (k + 0.5) / schedule.steps;
    PauliSum h_k = build_path(h_fci, s_mid);
    if (mode == AspMode::Oracle) {
      psi.apply_matrix_inplace(exact_propagator(h_k, dtau));
    } else {
      psi.apply_circuit_inplace(compile_pauli_evolution(h_k, dtau, dt_inner));
    }
    record(schedule.s_at(k + 1));
  }
  out.min_gap = out.trace.front().gap;
  for (const auto& row : out.trace) out.min_gap = std::min(out.min_gap, row.gap);
  out.final_overlap = out.trace.back().overlap;
  out.final_state = psi;
  return out;
}

}  // namespace fermiq
