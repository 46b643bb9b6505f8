#include "fermiq.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include <json.hpp>

#include "compiler.hpp"
#include "errors.hpp"
#include "fermion.hpp"
#include "integrals.hpp"
#include "spectral.hpp"
#include "statevector.hpp"

namespace {

thread_local std::string g_last_error;

fermiq_status fail(fermiq_status code, const std::string& what) {
  g_last_error = what;
  return code;
}

template <typename F>
fermiq_status guarded(F&& fn) {
  try {
    fn();
    return FERMIQ_OK;
  } catch (const fermiq::ParseError& e) {
    return fail(FERMIQ_ERR_PARSE, e.what());
  } catch (const fermiq::DimensionError& e) {
    return fail(FERMIQ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const fermiq::ResourceError& e) {
    return fail(FERMIQ_ERR_RESOURCE, e.what());
  } catch (const fermiq::ContractError& e) {
    return fail(FERMIQ_ERR_CONTRACT, e.what());
  } catch (const fermiq::IoError& e) {
    return fail(FERMIQ_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(FERMIQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FERMIQ_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

struct IpeaPayload {
  fermiq::IpeaResult result;
};

struct AspPayload {
  fermiq::AspResult result;
};

}  // namespace

struct fermiq_integrals {
  fermiq::IntegralTable table;
};
struct fermiq_operator {
  fermiq::PauliSum sum;
};
struct fermiq_grouped {
  fermiq::GroupedHamiltonian grouped;
};
struct fermiq_circuit {
  fermiq::Circuit circuit;
};
struct fermiq_spectrum {
  fermiq::SpectralDecomposition decomp;
};
struct fermiq_state {
  fermiq::StateVector state;
};
struct fermiq_ipea_result {
  IpeaPayload payload;
};
struct fermiq_asp_result {
  AspPayload payload;
};

extern "C" {

const char* fermiq_version(void) { return "0.1.0"; }

const char* fermiq_last_error(void) { return g_last_error.c_str(); }

void fermiq_string_free(char* s) { std::free(s); }

int fermiq_qubit_cap(void) { return fermiq::qubit_cap(); }

/* ---- integrals ---- */

fermiq_status fermiq_integrals_load_file(const char* path,
                                         fermiq_integrals** out) {
  if (!path || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new fermiq_integrals{fermiq::load_integrals_file(path)};
  });
}

fermiq_status fermiq_integrals_load_string(const char* text,
                                           fermiq_integrals** out) {
  if (!text || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new fermiq_integrals{fermiq::load_integrals_string(text)};
  });
}

void fermiq_integrals_free(fermiq_integrals* t) { delete t; }

int fermiq_integrals_norb(const fermiq_integrals* t) {
  return t ? t->table.n_spin_orbitals() : 0;
}

double fermiq_integrals_energy_shift(const fermiq_integrals* t) {
  return t ? t->table.energy_shift() : 0;
}

double fermiq_integrals_h1(const fermiq_integrals* t, int p, int q) {
  if (!t) return 0;
  try {
    return t->table.h1(p, q);
  } catch (...) {
    return 0;
  }
}

double fermiq_integrals_h2(const fermiq_integrals* t, int p, int q, int r,
                           int s) {
  if (!t) return 0;
  try {
    return t->table.h2(p, q, r, s);
  } catch (...) {
    return 0;
  }
}

/* ---- lowering ---- */

fermiq_status fermiq_build_hamiltonian(const fermiq_integrals* t,
                                       fermiq_operator** out) {
  if (!t || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new fermiq_operator{fermiq::build_hamiltonian(t->table)};
  });
}

void fermiq_operator_free(fermiq_operator* h) { delete h; }

int fermiq_operator_n_qubits(const fermiq_operator* h) {
  return h ? h->sum.n_qubits() : 0;
}

size_t fermiq_operator_term_count(const fermiq_operator* h) {
  return h ? h->sum.term_count() : 0;
}

double fermiq_operator_one_norm(const fermiq_operator* h) {
  return h ? h->sum.one_norm() : 0;
}

fermiq_status fermiq_operator_terms_json(const fermiq_operator* h,
                                         char** out_json) {
  if (!h || !out_json)
    return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [s, c] : h->sum.terms())
      arr.push_back({{"string", s.to_string()},
                     {"re", c.real()},
                     {"im", c.imag()}});
    *out_json = dup_string(arr.dump(2));
  });
}

fermiq_status fermiq_group_hamiltonian(const fermiq_integrals* t,
                                       fermiq_grouped** out) {
  if (!t || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new fermiq_grouped{fermiq::group_hamiltonian(t->table)};
  });
}

void fermiq_grouped_free(fermiq_grouped* g) { delete g; }

double fermiq_grouped_theta_total(const fermiq_grouped* g) {
  return g ? g->grouped.theta_total : 0;
}

fermiq_status fermiq_grouped_theta_p(const fermiq_grouped* g, int p,
                                     double* out) {
  if (!g || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  auto it = g->grouped.theta_p.find(p);
  if (it == g->grouped.theta_p.end())
    return fail(FERMIQ_ERR_INVALID_ARGUMENT,
                "orbital index out of range: " + std::to_string(p));
  *out = it->second;
  return FERMIQ_OK;
}

fermiq_status fermiq_grouped_eta(const fermiq_grouped* g, int p, int q,
                                 double* out) {
  if (!g || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  if (p > q) std::swap(p, q);
  auto it = g->grouped.eta.find({p, q});
  *out = it == g->grouped.eta.end() ? 0.0 : it->second;
  return FERMIQ_OK;
}

fermiq_status fermiq_grouped_summary_json(const fermiq_grouped* g,
                                          char** out_json) {
  if (!g || !out_json)
    return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& gr = g->grouped;
    nlohmann::json j;
    j["n_qubits"] = gr.n_qubits;
    j["energy_shift"] = gr.energy_shift;
    j["theta_total"] = gr.theta_total;
    for (const auto& [p, v] : gr.theta_p)
      j["theta_p"][std::to_string(p)] = v;
    for (const auto& [pq, v] : gr.eta)
      j["eta"][std::to_string(pq.first) + "," + std::to_string(pq.second)] = v;
    for (const auto& t : gr.number_terms)
      j["number_terms"].push_back({{"p", t.p}, {"h", t.h}});
    for (const auto& t : gr.excitation_terms)
      j["excitation_terms"].push_back({{"p", t.p}, {"q", t.q}, {"h", t.h}});
    for (const auto& t : gr.coulomb_exchange_terms)
      j["coulomb_exchange_terms"].push_back(
          {{"p", t.p}, {"q", t.q}, {"c", t.c}});
    for (const auto& t : gr.number_excitation_terms)
      j["number_excitation_terms"].push_back(
          {{"p", t.p}, {"q", t.q}, {"r", t.r}, {"h", t.h}});
    for (const auto& t : gr.double_excitation_terms)
      j["double_excitation_terms"].push_back(
          {{"p", t.p}, {"q", t.q}, {"r", t.r}, {"s", t.s}, {"h", t.h}});
    for (const auto& f : gr.quadruples)
      j["quadruples"].push_back({{"pqrs", f.pqrs},
                                 {"h1", f.h1},
                                 {"h2", f.h2},
                                 {"h3", f.h3}});
    *out_json = dup_string(j.dump(2));
  });
}

/* ---- oracles ---- */

fermiq_status fermiq_diagonalize(const fermiq_operator* h,
                                 fermiq_spectrum** out) {
  if (!h || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new fermiq_spectrum{fermiq::diagonalize(h->sum)};
  });
}

void fermiq_spectrum_free(fermiq_spectrum* s) { delete s; }

int fermiq_spectrum_size(const fermiq_spectrum* s) {
  return s ? static_cast<int>(s->decomp.eigenvalues.size()) : 0;
}

double fermiq_spectrum_eigenvalue(const fermiq_spectrum* s, int k) {
  if (!s || k < 0 || k >= s->decomp.eigenvalues.size()) return 0;
  return s->decomp.eigenvalues(k);
}

fermiq_status fermiq_spectrum_eigenstate(const fermiq_spectrum* s, int k,
                                         int n_qubits, fermiq_state** out) {
  if (!s || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new fermiq_state{s->decomp.eigenstate(k, n_qubits)};
  });
}

/* ---- states ---- */

fermiq_status fermiq_state_basis(int n_qubits, uint64_t index,
                                 fermiq_state** out) {
  if (!out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new fermiq_state{fermiq::StateVector::basis_state(n_qubits, index)};
  });
}

fermiq_status fermiq_state_load_json(const char* path, fermiq_state** out) {
  if (!path || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::ifstream in(path);
    if (!in) throw fermiq::IoError(std::string("cannot open state file: ") + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, true, true);
    int n = j.at("n_qubits").get<int>();
    auto amps = j.at("amplitudes");
    fermiq::Vector a(static_cast<Eigen::Index>(amps.size()));
    Eigen::Index i = 0;
    for (const auto& pair : amps)
      a(i++) = fermiq::Complex(pair.at(0).get<double>(),
                               pair.at(1).get<double>());
    fermiq::StateVector s(n, std::move(a));
    s.normalize();
    *out = new fermiq_state{std::move(s)};
  });
}

void fermiq_state_free(fermiq_state* s) { delete s; }

int fermiq_state_n_qubits(const fermiq_state* s) {
  return s ? s->state.n_qubits() : 0;
}

double fermiq_state_occupation(const fermiq_state* s, int p) {
  if (!s) return 0;
  try {
    return s->state.occupation(p);
  } catch (...) {
    return 0;
  }
}

fermiq_status fermiq_state_overlap_sq(const fermiq_state* a,
                                      const fermiq_state* b, double* out) {
  if (!a || !b || !out)
    return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = std::norm(a->state.inner(b->state)); });
}

fermiq_status fermiq_hf_index(const fermiq_operator* h, uint64_t* out) {
  if (!h || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = fermiq::diagonal_ground_index(h->sum.diagonal_part());
  });
}

/* ---- circuits ---- */

fermiq_status fermiq_compile_trotter(const fermiq_grouped* g, double t,
                                     double dt, int order,
                                     fermiq_circuit** out) {
  if (!g || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new fermiq_circuit{fermiq::trotter_compile(g->grouped, t, dt, order)};
  });
}

fermiq_status fermiq_compile_reference_program(const fermiq_integrals* t,
                                               double dt,
                                               fermiq_circuit** out) {
  if (!t || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new fermiq_circuit{fermiq::emit_h2_program(t->table, dt)};
  });
}

fermiq_status fermiq_circuit_controlize(const fermiq_circuit* c,
                                        int register_qubit,
                                        fermiq_circuit** out) {
  if (!c || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new fermiq_circuit{fermiq::controlize(c->circuit, register_qubit)};
  });
}

void fermiq_circuit_free(fermiq_circuit* c) { delete c; }

int fermiq_circuit_n_qubits(const fermiq_circuit* c) {
  return c ? c->circuit.n_qubits() : 0;
}

size_t fermiq_circuit_gate_count(const fermiq_circuit* c) {
  return c ? c->circuit.gate_count() : 0;
}

fermiq_status fermiq_circuit_to_json(const fermiq_circuit* c,
                                     char** out_json) {
  if (!c || !out_json)
    return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out_json = dup_string(fermiq::circuit_to_json(c->circuit));
  });
}

fermiq_status fermiq_circuit_save(const fermiq_circuit* c, const char* path) {
  if (!c || !path) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { fermiq::save_circuit(c->circuit, path); });
}

/* ---- trotter error ---- */

fermiq_status fermiq_trotter_error(const fermiq_grouped* g, double t,
                                   double dt, int order, fermiq_metric metric,
                                   double* out) {
  if (!g || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = fermiq::trotter_error(
        g->grouped, t, dt, order,
        metric == FERMIQ_METRIC_OPERATOR_NORM
            ? fermiq::TrotterMetric::OperatorNorm
            : fermiq::TrotterMetric::GroundEnergy);
  });
}

fermiq_status fermiq_trotter_energy_estimate(const fermiq_grouped* g,
                                             double t, double dt, int order,
                                             double* out) {
  if (!g || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    fermiq::PauliSum h = fermiq::lower_grouped(g->grouped);
    fermiq::SpectralDecomposition d = fermiq::diagonalize(h);
    fermiq::StateVector psi0 = d.eigenstate(0, g->grouped.n_qubits);
    fermiq::StateVector evolved = fermiq::run_circuit(
        psi0, fermiq::trotter_compile(g->grouped, t, dt, order));
    *out = -std::arg(psi0.inner(evolved)) / t;
  });
}

/* ---- ipea ---- */

fermiq_status fermiq_ipea_run(const fermiq_integrals* t,
                              const fermiq_state* initial,
                              const fermiq_ipea_options* options,
                              fermiq_ipea_result** out) {
  if (!t || !initial || !options || !out)
    return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    fermiq::PauliSum h = fermiq::build_hamiltonian(t->table);
    fermiq::EnergyWindow w =
        fermiq::default_window(h, options->margin >= 0 ? options->margin : 0.5);
    std::unique_ptr<fermiq::ControlledPowerProvider> provider;
    if (options->dt > 0) {
      fermiq::GroupedHamiltonian g = fermiq::group_hamiltonian(t->table);
      provider = fermiq::make_circuit_provider(
          g, w, options->dt, options->order > 0 ? options->order : 1);
    } else {
      provider = fermiq::make_exact_provider(h, w);
    }
    *out = new fermiq_ipea_result{IpeaPayload{fermiq::ipea_run(
        *provider, initial->state, options->bits, w, options->seed)}};
  });
}

void fermiq_ipea_result_free(fermiq_ipea_result* r) { delete r; }

double fermiq_ipea_result_energy(const fermiq_ipea_result* r) {
  return r ? r->payload.result.energy : 0;
}

double fermiq_ipea_result_phase(const fermiq_ipea_result* r) {
  return r ? r->payload.result.phase : 0;
}

int fermiq_ipea_result_bit_count(const fermiq_ipea_result* r) {
  return r ? r->payload.result.record.length() : 0;
}

int fermiq_ipea_result_bit(const fermiq_ipea_result* r, int k) {
  if (!r || k < 0 || k >= r->payload.result.record.length()) return -1;
  return r->payload.result.record.bits[static_cast<std::size_t>(k)];
}

void fermiq_ipea_result_window(const fermiq_ipea_result* r, double* e_min,
                               double* e_max, double* e_shift, double* omega,
                               double* k_value) {
  if (!r) return;
  const auto& w = r->payload.result.record.window;
  if (e_min) *e_min = w.e_min;
  if (e_max) *e_max = w.e_max;
  if (e_shift) *e_shift = w.e_shift;
  if (omega) *omega = w.omega();
  if (k_value) *k_value = w.K();
}

fermiq_status fermiq_ipea_result_state(const fermiq_ipea_result* r,
                                       fermiq_state** out) {
  if (!r || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new fermiq_state{r->payload.result.system_state};
  });
}

/* ---- asp ---- */

fermiq_status fermiq_asp_run(const fermiq_operator* h, double total_time,
                             int steps, fermiq_asp_mode mode, double dt_inner,
                             fermiq_asp_result** out) {
  if (!h || !out) return fail(FERMIQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    fermiq::AdiabaticSchedule sched{total_time, steps};
    *out = new fermiq_asp_result{AspPayload{fermiq::adiabatic_evolve(
        h->sum, sched,
        mode == FERMIQ_ASP_ORACLE ? fermiq::AspMode::Oracle
                                  : fermiq::AspMode::Circuit,
        dt_inner)}};
  });
}

void fermiq_asp_result_free(fermiq_asp_result* r) { delete r; }

int fermiq_asp_row_count(const fermiq_asp_result* r) {
  return r ? static_cast<int>(r->payload.result.trace.size()) : 0;
}

void fermiq_asp_row(const fermiq_asp_result* r, int k, double* s,
                    double* overlap, double* gap, int* degenerate) {
  if (!r || k < 0 || k >= static_cast<int>(r->payload.result.trace.size()))
    return;
  const auto& row = r->payload.result.trace[static_cast<std::size_t>(k)];
  if (s) *s = row.s;
  if (overlap) *overlap = row.overlap;
  if (gap) *gap = row.gap;
  if (degenerate) *degenerate = row.degenerate ? 1 : 0;
}

double fermiq_asp_final_overlap(const fermiq_asp_result* r) {
  return r ? r->payload.result.final_overlap : 0;
}

double fermiq_asp_min_gap(const fermiq_asp_result* r) {
  return r ? r->payload.result.min_gap : 0;
}

}  // extern "C"
