/*
 * fermiq - molecular electronic-structure quantum simulation toolkit.
 *
 * C interface of the shared library: opaque handles plus status codes.
 * Every function that can fail returns a fermiq_status; on failure a
 * human-readable message is available from fermiq_last_error() (thread
 * local, valid until the next failing call on the same thread).
 *
 * Orbital and qubit indices are 1-based throughout. Energies and times are
 * atomic units.
 */
#ifndef FERMIQ_H
#define FERMIQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fermiq_status {
  FERMIQ_OK = 0,
  FERMIQ_ERR_INVALID_ARGUMENT = 1,
  FERMIQ_ERR_PARSE = 2,
  FERMIQ_ERR_CONTRACT = 3,
  FERMIQ_ERR_RESOURCE = 4,
  FERMIQ_ERR_IO = 5,
  FERMIQ_ERR_INTERNAL = 6
} fermiq_status;

typedef struct fermiq_integrals fermiq_integrals;
typedef struct fermiq_operator fermiq_operator;   /* weighted Pauli sum */
typedef struct fermiq_grouped fermiq_grouped;     /* partitioned Hamiltonian */
typedef struct fermiq_circuit fermiq_circuit;
typedef struct fermiq_spectrum fermiq_spectrum;
typedef struct fermiq_state fermiq_state;         /* dense statevector */
typedef struct fermiq_ipea_result fermiq_ipea_result;
typedef struct fermiq_asp_result fermiq_asp_result;

const char* fermiq_version(void);
const char* fermiq_last_error(void);
void fermiq_string_free(char* s);
/* Dense-matrix qubit cap (QSIM_QUBIT_CAP environment override, default 12). */
int fermiq_qubit_cap(void);

/* ---- integrals ---------------------------------------------------- */

fermiq_status fermiq_integrals_load_file(const char* path,
                                         fermiq_integrals** out);
fermiq_status fermiq_integrals_load_string(const char* text,
                                           fermiq_integrals** out);
void fermiq_integrals_free(fermiq_integrals* t);
int fermiq_integrals_norb(const fermiq_integrals* t);
double fermiq_integrals_energy_shift(const fermiq_integrals* t);
double fermiq_integrals_h1(const fermiq_integrals* t, int p, int q);
double fermiq_integrals_h2(const fermiq_integrals* t, int p, int q, int r,
                           int s);

/* ---- Hamiltonian lowering ----------------------------------------- */

fermiq_status fermiq_build_hamiltonian(const fermiq_integrals* t,
                                       fermiq_operator** out);
void fermiq_operator_free(fermiq_operator* h);
int fermiq_operator_n_qubits(const fermiq_operator* h);
size_t fermiq_operator_term_count(const fermiq_operator* h);
double fermiq_operator_one_norm(const fermiq_operator* h);
/* JSON array of {"string": "XZY...", "re": c, "im": c}. Caller frees. */
fermiq_status fermiq_operator_terms_json(const fermiq_operator* h,
                                         char** out_json);

fermiq_status fermiq_group_hamiltonian(const fermiq_integrals* t,
                                       fermiq_grouped** out);
void fermiq_grouped_free(fermiq_grouped* g);
double fermiq_grouped_theta_total(const fermiq_grouped* g);
fermiq_status fermiq_grouped_theta_p(const fermiq_grouped* g, int p,
                                     double* out);
fermiq_status fermiq_grouped_eta(const fermiq_grouped* g, int p, int q,
                                 double* out);
/* Term lists and the number-number aggregates as JSON. Caller frees. */
fermiq_status fermiq_grouped_summary_json(const fermiq_grouped* g,
                                          char** out_json);

/* ---- dense oracles ------------------------------------------------- */

fermiq_status fermiq_diagonalize(const fermiq_operator* h,
                                 fermiq_spectrum** out);
void fermiq_spectrum_free(fermiq_spectrum* s);
int fermiq_spectrum_size(const fermiq_spectrum* s);
double fermiq_spectrum_eigenvalue(const fermiq_spectrum* s, int k);
fermiq_status fermiq_spectrum_eigenstate(const fermiq_spectrum* s, int k,
                                         int n_qubits, fermiq_state** out);

/* ---- states -------------------------------------------------------- */

fermiq_status fermiq_state_basis(int n_qubits, uint64_t index,
                                 fermiq_state** out);
/* JSON file {"n_qubits": n, "amplitudes": [[re, im], ...]}; normalized on
 * load. */
fermiq_status fermiq_state_load_json(const char* path, fermiq_state** out);
void fermiq_state_free(fermiq_state* s);
int fermiq_state_n_qubits(const fermiq_state* s);
double fermiq_state_occupation(const fermiq_state* s, int p);
fermiq_status fermiq_state_overlap_sq(const fermiq_state* a,
                                      const fermiq_state* b, double* out);
/* Basis index of the mean-field (diagonal-part) ground state. */
fermiq_status fermiq_hf_index(const fermiq_operator* h, uint64_t* out);

/* ---- circuit compilation ------------------------------------------- */

fermiq_status fermiq_compile_trotter(const fermiq_grouped* g, double t,
                                     double dt, int order,
                                     fermiq_circuit** out);
/* The hand-scheduled controlled single-slice program for the bundled
 * four-orbital system (register qubit 5). */
fermiq_status fermiq_compile_reference_program(const fermiq_integrals* t,
                                               double dt,
                                               fermiq_circuit** out);
fermiq_status fermiq_circuit_controlize(const fermiq_circuit* c,
                                        int register_qubit,
                                        fermiq_circuit** out);
void fermiq_circuit_free(fermiq_circuit* c);
int fermiq_circuit_n_qubits(const fermiq_circuit* c);
size_t fermiq_circuit_gate_count(const fermiq_circuit* c);
fermiq_status fermiq_circuit_to_json(const fermiq_circuit* c,
                                     char** out_json);
fermiq_status fermiq_circuit_save(const fermiq_circuit* c, const char* path);

/* ---- Trotter error ------------------------------------------------- */

typedef enum fermiq_metric {
  FERMIQ_METRIC_OPERATOR_NORM = 0,
  FERMIQ_METRIC_GROUND_ENERGY = 1
} fermiq_metric;

fermiq_status fermiq_trotter_error(const fermiq_grouped* g, double t,
                                   double dt, int order, fermiq_metric metric,
                                   double* out);
/* Ground-state autocorrelation energy estimate of the compiled propagator:
 * -arg(<psi0|U_circuit|psi0>)/t. */
fermiq_status fermiq_trotter_energy_estimate(const fermiq_grouped* g,
                                             double t, double dt, int order,
                                             double* out);

/* ---- iterative phase estimation ------------------------------------ */

typedef struct fermiq_ipea_options {
  int bits;        /* number of phase bits L, 1..30 */
  uint64_t seed;   /* measurement RNG seed */
  double dt;       /* <= 0: exact-propagator provider; > 0: compiled slices */
  int order;       /* Trotter order for the compiled provider (1 or 2) */
  double margin;   /* energy-window margin (a.u.), >= 0 */
} fermiq_ipea_options;

fermiq_status fermiq_ipea_run(const fermiq_integrals* t,
                              const fermiq_state* initial,
                              const fermiq_ipea_options* options,
                              fermiq_ipea_result** out);
void fermiq_ipea_result_free(fermiq_ipea_result* r);
double fermiq_ipea_result_energy(const fermiq_ipea_result* r);
double fermiq_ipea_result_phase(const fermiq_ipea_result* r);
int fermiq_ipea_result_bit_count(const fermiq_ipea_result* r);
int fermiq_ipea_result_bit(const fermiq_ipea_result* r, int k);
void fermiq_ipea_result_window(const fermiq_ipea_result* r, double* e_min,
                               double* e_max, double* e_shift, double* omega,
                               double* k_value);
fermiq_status fermiq_ipea_result_state(const fermiq_ipea_result* r,
                                       fermiq_state** out);

/* ---- adiabatic state preparation ------------------------------------ */

typedef enum fermiq_asp_mode {
  FERMIQ_ASP_ORACLE = 0,
  FERMIQ_ASP_CIRCUIT = 1
} fermiq_asp_mode;

fermiq_status fermiq_asp_run(const fermiq_operator* h, double total_time,
                             int steps, fermiq_asp_mode mode, double dt_inner,
                             fermiq_asp_result** out);
void fermiq_asp_result_free(fermiq_asp_result* r);
int fermiq_asp_row_count(const fermiq_asp_result* r);
void fermiq_asp_row(const fermiq_asp_result* r, int k, double* s,
                    double* overlap, double* gap, int* degenerate);
double fermiq_asp_final_overlap(const fermiq_asp_result* r);
double fermiq_asp_min_gap(const fermiq_asp_result* r);

#ifdef __cplusplus
}
#endif

#endif /* FERMIQ_H */
