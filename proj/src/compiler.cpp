#include "compiler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace fermiq {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kTimeEps = 1e-12;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}
}  // namespace

Circuit emit_zstring(const std::vector<int>& qubits, double theta, int n) {
  if (qubits.empty()) throw ContractError("emit_zstring: no qubits");
  std::set<int> uniq(qubits.begin(), qubits.end());
  if (uniq.size() != qubits.size())
    throw ContractError("emit_zstring: duplicate qubits");
  Circuit c(n);
  std::vector<int> qs(qubits);
  std::sort(qs.begin(), qs.end());
  for (std::size_t i = 0; i + 1 < qs.size(); ++i)
    c.append(cnot(qs[i], qs[i + 1]));
  c.append(rz(qs.back(), theta));
  for (std::size_t i = qs.size() - 1; i-- > 0;)
    c.append(cnot(qs[i], qs[i + 1]));
  return c;
}

void emit_pauli_block(Circuit& c, const PauliString& p, double coef,
                      double dt) {
  if (p.is_identity()) {
    c.append(global_phase(coef * dt));
    return;
  }
  auto support = p.support();
  for (int q : support) {
    switch (p.letter(q)) {
      case Pauli::X: c.append(hadamard(q)); break;
      case Pauli::Y: c.append(ybasis(q)); break;
      default: break;
    }
  }
  double sign = (p.y_count() % 2 == 0) ? 1.0 : -1.0;
  c.extend(emit_zstring(support, 2.0 * coef * dt * sign, c.n_qubits()));
  for (auto it = support.rbegin(); it != support.rend(); ++it) {
    switch (p.letter(*it)) {
      case Pauli::X: c.append(hadamard(*it)); break;
      case Pauli::Y: c.append(ybasis_dagger(*it)); break;
      default: break;
    }
  }
}

Circuit emit_template(TermClass cls, const std::vector<int>& indices,
                      double theta, int n) {
  Circuit c(n);
  if (cls == TermClass::Number) {
    if (indices.size() != 1) throw ContractError("number term takes {p}");
    if (indices[0] < 1 || indices[0] > n)
      throw DimensionError("number term index out of range");
    c.append(tphase(indices[0], theta));
    return c;
  }
  for (const auto& [s, coef] : template_blocks(cls, indices, theta, n)) {
    if (std::abs(coef.imag()) > 1e-12)
      throw ContractError("cannot compile a non-Hermitian term");
    emit_pauli_block(c, s, coef.real(), 1.0);
  }
  return c;
}

std::vector<TrotterTerm> trotter_terms(const GroupedHamiltonian& g) {
  int n = g.n_qubits;
  std::vector<TrotterTerm> terms;

  if (g.energy_shift != 0.0) {
    TrotterTerm t{TrotterTerm::Kind::PauliBlocks, "shift"};
    t.blocks.emplace_back(PauliString(n), g.energy_shift);
    terms.push_back(std::move(t));
  }
  for (const auto& nt : g.number_terms) {
    TrotterTerm t{TrotterTerm::Kind::Number,
                  "number(" + std::to_string(nt.p) + ")"};
    t.p = nt.p;
    t.h = nt.h;
    terms.push_back(std::move(t));
  }
  if (!g.coulomb_exchange_terms.empty()) {
    TrotterTerm t{TrotterTerm::Kind::NumberNumber, "number_number"};
    t.theta_total = g.theta_total;
    for (const auto& [p, th] : g.theta_p)
      if (th != 0.0) t.z_rates.emplace_back(p, th);
    // pair order (q descending, then p descending below it)
    for (int q = n; q >= 2; --q)
      for (int p = q - 1; p >= 1; --p) {
        auto it = g.eta.find({p, q});
        if (it != g.eta.end() && it->second != 0.0)
          t.zz_weights.emplace_back(p, q, it->second);
      }
    terms.push_back(std::move(t));
  }
  {
    auto sorted = g.number_excitation_terms;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return std::tie(a.p, a.r, a.q) < std::tie(b.p, b.r, b.q);
    });
    for (const auto& ne : sorted) {
      TrotterTerm t{TrotterTerm::Kind::PauliBlocks,
                    "number_excitation(" + std::to_string(ne.p) + "," +
                        std::to_string(ne.q) + "," + std::to_string(ne.r) +
                        ")"};
      for (const auto& [s, coef] :
           template_blocks(TermClass::NumberExcitation, {ne.p, ne.q, ne.r},
                           ne.h, n))
        t.blocks.emplace_back(s, coef.real());
      terms.push_back(std::move(t));
    }
  }
  {
    auto sorted = g.excitation_terms;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return std::tie(a.p, a.q) < std::tie(b.p, b.q);
    });
    for (const auto& ex : sorted) {
      TrotterTerm t{TrotterTerm::Kind::PauliBlocks,
                    "excitation(" + std::to_string(ex.p) + "," +
                        std::to_string(ex.q) + ")"};
      for (const auto& [s, coef] :
           template_blocks(TermClass::Excitation, {ex.p, ex.q}, ex.h, n))
        t.blocks.emplace_back(s, coef.real());
      terms.push_back(std::move(t));
    }
  }
  for (const auto& quad : g.quadruples) {
    PauliSum family = lower_double_excitation_family(g, quad.pqrs);
    if (family.empty()) continue;
    auto [p, q, r, s] = quad.pqrs;
    TrotterTerm t{TrotterTerm::Kind::PauliBlocks,
                  "double_excitation(" + std::to_string(p) + "," +
                      std::to_string(q) + "," + std::to_string(r) + "," +
                      std::to_string(s) + ")"};
    // canonical quadruplet order, then odd-Y strings for exotic inputs
    std::vector<std::pair<PauliString, double>> ordered;
    auto take = [&](const char* letters) {
      PauliString str(n);
      for (int k = s + 1; k < r; ++k) str = str.with_letter(k, Pauli::Z);
      for (int k = q + 1; k < p; ++k) str = str.with_letter(k, Pauli::Z);
      const int qubits[4] = {p, q, r, s};
      for (int i = 0; i < 4; ++i)
        str = str.with_letter(qubits[i], pauli_from_char(letters[i]));
      Complex coef = family.coefficient(str);
      if (std::abs(coef) >= kCoefficientEps)
        ordered.emplace_back(str, coef.real());
      return str;
    };
    std::set<PauliString> taken;
    for (const char* combo : {"XXXX", "YYYY", "XYXY", "YXYX", "YYXX", "XXYY",
                              "YXXY", "XYYX"})
      taken.insert(take(combo));
    for (const auto& [str, coef] : family.terms())
      if (!taken.count(str)) ordered.emplace_back(str, coef.real());
    t.blocks = std::move(ordered);
    terms.push_back(std::move(t));
  }
  return terms;
}

PauliSum term_operator(const TrotterTerm& t, int n) {
  PauliSum out(n);
  switch (t.kind) {
    case TrotterTerm::Kind::Number:
      return template_lower(TermClass::Number, {t.p}, t.h, n);
    case TrotterTerm::Kind::NumberNumber: {
      if (t.theta_total != 0.0)
        out += PauliSum::identity(n, t.theta_total);
      for (const auto& [p, th] : t.z_rates)
        out.add_term(PauliString(n, p, Pauli::Z), -th / 4.0);
      for (const auto& [p, q, eta] : t.zz_weights)
        out.add_term(PauliString(n, p, Pauli::Z).with_letter(q, Pauli::Z),
                     eta);
      return out;
    }
    case TrotterTerm::Kind::PauliBlocks:
      for (const auto& [s, c] : t.blocks) out.add_term(s, c);
      return out;
  }
  return out;
}

void emit_term(Circuit& c, const TrotterTerm& t, double dt) {
  switch (t.kind) {
    case TrotterTerm::Kind::Number:
      c.append(tphase(t.p, t.h * dt));
      return;
    case TrotterTerm::Kind::NumberNumber: {
      if (t.theta_total != 0.0) c.append(global_phase(t.theta_total * dt));
      for (const auto& [p, th] : t.z_rates) c.append(rz(p, -th * dt / 2.0));
      for (const auto& [p, q, eta] : t.zz_weights)
        c.extend(emit_zstring({p, q}, 2.0 * eta * dt, c.n_qubits()));
      return;
    }
    case TrotterTerm::Kind::PauliBlocks:
      for (const auto& [s, coef] : t.blocks) emit_pauli_block(c, s, coef, dt);
      return;
  }
}

Circuit trotter_compile(const GroupedHamiltonian& g, double t, double dt,
                        int order) {
  if (dt <= 0) throw ContractError("trotter_compile: dt must be positive");
  if (t < 0) throw ContractError("trotter_compile: negative evolution time");
  if (order != 1 && order != 2)
    throw ContractError("trotter_compile: order must be 1 or 2");
  auto terms = trotter_terms(g);
  Circuit c(g.n_qubits);

  auto emit_slice = [&](double step) {
    if (order == 1 || terms.size() <= 1) {
      for (const auto& term : terms) emit_term(c, term, step);
      return;
    }
    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
      emit_term(c, terms[i], step / 2);
    emit_term(c, terms.back(), step);
    for (std::size_t i = terms.size() - 1; i-- > 0;)
      emit_term(c, terms[i], step / 2);
  };

  long long full = static_cast<long long>(std::floor(t / dt + kTimeEps));
  double remainder = t - static_cast<double>(full) * dt;
  if (remainder < kTimeEps * std::max(1.0, t)) remainder = 0;
  for (long long k = 0; k < full; ++k) emit_slice(dt);
  if (remainder > 0) emit_slice(remainder);

  std::vector<std::string> labels;
  for (const auto& term : terms) labels.push_back(term.label);
  std::string joined;
  if (order == 2 && terms.size() > 1) {
    for (std::size_t i = 0; i < terms.size(); ++i)
      joined += (i ? ";" : "") + labels[i];
    for (std::size_t i = terms.size() - 1; i-- > 0;) joined += ";" + labels[i];
  } else {
    for (std::size_t i = 0; i < labels.size(); ++i)
      joined += (i ? ";" : "") + labels[i];
  }
  auto& meta = c.metadata();
  meta["kind"] = "trotter";
  meta["order"] = std::to_string(order);
  meta["time"] = fmt(t);
  meta["dt"] = fmt(dt);
  meta["slices"] = std::to_string(full + (remainder > 0 ? 1 : 0));
  meta["full_slices"] = std::to_string(full);
  meta["remainder_dt"] = fmt(remainder);
  meta["gate_count"] = std::to_string(c.gate_count());
  meta["slice_terms"] = joined;
  return c;
}

Circuit compile_pauli_evolution(const PauliSum& h, double t, double dt) {
  if (dt <= 0) throw ContractError("compile_pauli_evolution: dt must be positive");
  if (t < 0) throw ContractError("compile_pauli_evolution: negative time");
  if (h.max_imag() > 1e-12)
    throw ContractError("compile_pauli_evolution: operator not Hermitian");
  Circuit c(h.n_qubits());
  long long full = static_cast<long long>(std::floor(t / dt + kTimeEps));
  double remainder = t - static_cast<double>(full) * dt;
  if (remainder < kTimeEps * std::max(1.0, t)) remainder = 0;
  auto emit_slice = [&](double step) {
    for (const auto& [s, coef] : h.terms())
      emit_pauli_block(c, s, coef.real(), step);
  };
  for (long long k = 0; k < full; ++k) emit_slice(dt);
  if (remainder > 0) emit_slice(remainder);
  c.metadata()["kind"] = "pauli_evolution";
  c.metadata()["gate_count"] = std::to_string(c.gate_count());
  return c;
}

Circuit controlize(const Circuit& c, int register_qubit) {
  int n = std::max(c.n_qubits(), register_qubit);
  if (register_qubit < 1)
    throw ContractError("controlize: invalid register qubit");
  for (const auto& g : c.gates()) {
    if (g.kind != GateKind::GlobalPhase && g.target == register_qubit)
      throw ContractError("controlize: register qubit used by circuit");
    if (g.control && *g.control == register_qubit)
      throw ContractError("controlize: register qubit used by circuit");
  }
  Circuit out(n);
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Rz:
      case GateKind::Tphase: {
        if (g.control)
          throw ContractError("controlize: gate already carries a control");
        Gate cg = g;
        cg.control = register_qubit;
        out.append(cg);
        break;
      }
      case GateKind::GlobalPhase:
        // phase on the register's |1> subspace == Tphase on the register
        out.append(tphase(register_qubit, g.param));
        break;
      default:
        out.append(g);
        break;
    }
  }
  for (const auto& [k, v] : c.metadata()) out.metadata()[k] = v;
  out.metadata()["controlled_on"] = std::to_string(register_qubit);
  out.metadata()["gate_count"] = std::to_string(out.gate_count());
  return out;
}

Circuit emit_h2_program(const IntegralTable& t, double dt) {
  if (t.n_spin_orbitals() != 4)
    throw ContractError("the reference program requires exactly 4 orbitals");
  constexpr int kReg = 5;
  GroupedHamiltonian g = group_hamiltonian(t);
  Circuit c(kReg);

  // single-electron block
  for (int p = 1; p <= 4; ++p) {
    double h = t.h1(p, p);
    c.append({GateKind::Tphase, p, kReg, h * dt},
             "h" + std::to_string(p) + std::to_string(p) + "*t");
  }
  // number-number block
  c.append(tphase(kReg, g.theta_total * dt), "Theta*t");
  for (int p = 1; p <= 4; ++p)
    c.append({GateKind::Rz, p, kReg, -g.theta_p.at(p) * dt / 2.0},
             "-theta" + std::to_string(p) + "*t/2");
  const std::pair<int, int> pair_order[6] = {{3, 4}, {2, 4}, {1, 4},
                                             {2, 3}, {1, 3}, {1, 2}};
  for (auto [p, q] : pair_order) {
    double eta = g.eta.count({p, q}) ? g.eta.at({p, q}) : 0.0;
    std::string nm = "n" + std::to_string(p) + std::to_string(q);
    c.append(cnot(p, q));
    c.append({GateKind::Rz, q, kReg, 2.0 * eta * dt}, "2*" + nm + "*t");
    c.append(cnot(p, q));
  }
  // two-electron basis blocks; theta_ee = h1423 + h1243
  double theta_ee = t.h2(1, 4, 2, 3) + t.h2(1, 2, 4, 3);
  const std::string expr_m = "-t*(h1423+h1243)/4";
  const std::string expr_p = "t*(h1423+h1243)/4";

  auto ladder = [&](bool forward) {
    if (forward) {
      c.append(cnot(1, 2));
      c.append(cnot(2, 3));
      c.append(cnot(3, 4));
    } else {
      c.append(cnot(3, 4));
      c.append(cnot(2, 3));
      c.append(cnot(1, 2));
    }
  };
  auto crz = [&](double angle, const std::string& expr) {
    c.append({GateKind::Rz, 4, kReg, angle}, expr);
  };

  // XXYY
  c.append(hadamard(1));
  c.append(hadamard(2));
  c.append(rx(3, -kHalfPi));
  c.append(rx(4, -kHalfPi));
  ladder(true);
  crz(-theta_ee * dt / 4.0, expr_m);
  ladder(false);
  c.append(rx(4, kHalfPi));
  c.append(rx(3, kHalfPi));
  c.append(hadamard(2));
  c.append(hadamard(1));
  // YYXX
  c.append(rx(1, -kHalfPi));
  c.append(rx(2, -kHalfPi));
  c.append(hadamard(3));
  c.append(hadamard(4));
  ladder(true);
  crz(-theta_ee * dt / 4.0, expr_m);
  ladder(false);
  c.append(hadamard(4));
  c.append(hadamard(3));
  c.append(rx(2, kHalfPi));
  c.append(rx(1, kHalfPi));
  // XYYX
  c.append(hadamard(1));
  c.append(rx(2, -kHalfPi));
  c.append(rx(3, -kHalfPi));
  c.append(hadamard(4));
  ladder(true);
  crz(theta_ee * dt / 4.0, expr_p);
  ladder(false);
  c.append(hadamard(4));
  c.append(rx(3, kHalfPi));
  c.append(rx(2, kHalfPi));
  c.append(hadamard(1));
  // YXXY (basis pair inverted relative to the other blocks)
  c.append(rx(1, kHalfPi));
  c.append(hadamard(2));
  c.append(hadamard(3));
  c.append(rx(4, kHalfPi));
  ladder(true);
  crz(theta_ee * dt / 4.0, expr_p);
  ladder(false);
  c.append(rx(1, -kHalfPi));
  c.append(hadamard(2));
  c.append(hadamard(3));
  c.append(rx(4, -kHalfPi));

  auto& meta = c.metadata();
  meta["kind"] = "h2_reference_program";
  meta["dt"] = fmt(dt);
  meta["register"] = std::to_string(kReg);
  meta["gate_count"] = std::to_string(c.gate_count());
  return c;
}

}  // namespace fermiq
