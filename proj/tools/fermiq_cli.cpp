// fermiq command-line workbench. Talks to the core exclusively through the
// shared library's C interface (fermiq.h).

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermiq.h"

namespace {

// exit codes: 0 ok, 1 usage, 2 parse/io, 3 numeric contract, 4 threshold
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitContract = 3;
constexpr int kExitThreshold = 4;

int exit_code_for(fermiq_status s) {
  switch (s) {
    case FERMIQ_OK: return kExitOk;
    case FERMIQ_ERR_INVALID_ARGUMENT: return kExitUsage;
    case FERMIQ_ERR_PARSE:
    case FERMIQ_ERR_IO: return kExitParse;
    default: return kExitContract;
  }
}

struct CliError {
  int code;
  std::string message;
};

void check(fermiq_status s, const std::string& context) {
  if (s == FERMIQ_OK) return;
  throw CliError{exit_code_for(s), context + ": " + fermiq_last_error()};
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kExitParse, "cannot write " + path};
  out << text;
}

template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  explicit Handle(T* p) : ptr(p) {}
  ~Handle() { if (ptr) Free(ptr); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
  Handle& operator=(Handle&& o) noexcept {
    std::swap(ptr, o.ptr);
    return *this;
  }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
  explicit operator bool() const { return ptr != nullptr; }
};

using Integrals = Handle<fermiq_integrals, fermiq_integrals_free>;
using Operator = Handle<fermiq_operator, fermiq_operator_free>;
using Grouped = Handle<fermiq_grouped, fermiq_grouped_free>;
using Spectrum = Handle<fermiq_spectrum, fermiq_spectrum_free>;
using State = Handle<fermiq_state, fermiq_state_free>;
using CircuitH = Handle<fermiq_circuit, fermiq_circuit_free>;
using IpeaRes = Handle<fermiq_ipea_result, fermiq_ipea_result_free>;
using AspRes = Handle<fermiq_asp_result, fermiq_asp_result_free>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  fermiq_string_free(s);
  return out;
}

Integrals load(const std::string& path) {
  Integrals t;
  check(fermiq_integrals_load_file(path.c_str(), t.out()), path);
  return t;
}

// ---------------------------------------------------------------- exact

int cmd_exact(const std::string& integrals_path, bool as_json,
              const std::string& out_path) {
  Integrals t = load(integrals_path);
  Operator h;
  check(fermiq_build_hamiltonian(t.get(), h.out()), "build");
  Spectrum spec;
  check(fermiq_diagonalize(h.get(), spec.out()), "diagonalize");
  int n = fermiq_operator_n_qubits(h.get());
  int size = fermiq_spectrum_size(spec.get());

  State ground;
  check(fermiq_spectrum_eigenstate(spec.get(), 0, n, ground.out()), "ground");

  nlohmann::json j;
  j["n_qubits"] = n;
  j["term_count"] = fermiq_operator_term_count(h.get());
  auto& ev = j["eigenvalues"] = nlohmann::json::array();
  for (int k = 0; k < size; ++k)
    ev.push_back(fermiq_spectrum_eigenvalue(spec.get(), k));
  j["ground_energy"] = fermiq_spectrum_eigenvalue(spec.get(), 0);
  auto& occ = j["ground_occupations"] = nlohmann::json::array();
  for (int p = 1; p <= n; ++p)
    occ.push_back(fermiq_state_occupation(ground.get(), p));
  uint64_t hf = 0;
  check(fermiq_hf_index(h.get(), &hf), "hf index");
  State hf_state;
  check(fermiq_state_basis(n, hf, hf_state.out()), "hf state");
  double hf_overlap = 0;
  check(fermiq_state_overlap_sq(ground.get(), hf_state.get(), &hf_overlap),
        "overlap");
  j["hf_index"] = hf;
  j["hf_overlap"] = hf_overlap;

  if (!out_path.empty()) write_text(out_path, j.dump(2) + "\n");
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "n_qubits: " << n << "\n";
  std::cout << "eigenvalues (ascending):\n";
  for (int k = 0; k < size; ++k)
    std::cout << "  " << fmt(fermiq_spectrum_eigenvalue(spec.get(), k)) << "\n";
  std::cout << "ground_energy: " << fmt(j["ground_energy"].get<double>())
            << "\n";
  std::cout << "ground occupations:";
  for (int p = 1; p <= n; ++p)
    std::cout << " " << fmt(fermiq_state_occupation(ground.get(), p));
  std::cout << "\nhf_overlap: " << fmt(hf_overlap) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- compile

int cmd_compile(const std::string& integrals_path, double t_total, double dt,
                int order, bool appendix, const std::string& out_path) {
  Integrals t = load(integrals_path);
  CircuitH circ;
  if (appendix) {
    check(fermiq_compile_reference_program(t.get(), dt, circ.out()),
          "compile --appendix");
  } else {
    Grouped g;
    check(fermiq_group_hamiltonian(t.get(), g.out()), "group");
    check(fermiq_compile_trotter(g.get(), t_total, dt, order, circ.out()),
          "compile");
  }
  char* json_text = nullptr;
  check(fermiq_circuit_to_json(circ.get(), &json_text), "serialize");
  std::string text = take_string(json_text);
  if (!out_path.empty())
    write_text(out_path, text + "\n");
  else
    std::cout << text << "\n";
  std::cerr << "gates: " << fermiq_circuit_gate_count(circ.get()) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- ipea

int cmd_ipea(const std::string& integrals_path, int bits, double dt, int order,
             uint64_t seed, const std::string& state_kind,
             const std::string& state_file, double margin, bool as_json,
             const std::string& out_path) {
  Integrals t = load(integrals_path);
  Operator h;
  check(fermiq_build_hamiltonian(t.get(), h.out()), "build");
  int n = fermiq_operator_n_qubits(h.get());

  State initial;
  std::optional<double> golden;
  Spectrum spec;
  if (fermiq_diagonalize(h.get(), spec.out()) == FERMIQ_OK)
    golden = fermiq_spectrum_eigenvalue(spec.get(), 0);

  if (state_kind == "hf") {
    uint64_t hf = 0;
    check(fermiq_hf_index(h.get(), &hf), "hf index");
    check(fermiq_state_basis(n, hf, initial.out()), "hf state");
  } else if (state_kind == "exact") {
    if (!spec)
      throw CliError{kExitContract, "exact state requires diagonalization"};
    check(fermiq_spectrum_eigenstate(spec.get(), 0, n, initial.out()),
          "eigenstate");
  } else if (state_kind == "file") {
    if (state_file.empty())
      throw CliError{kExitUsage, "--state file requires --state-file"};
    check(fermiq_state_load_json(state_file.c_str(), initial.out()),
          state_file);
  } else {
    throw CliError{kExitUsage, "unknown --state '" + state_kind + "'"};
  }

  fermiq_ipea_options opts{bits, seed, dt, order, margin};
  IpeaRes res;
  check(fermiq_ipea_run(t.get(), initial.get(), &opts, res.out()), "ipea");

  double e_min, e_max, e_shift, omega, kval;
  fermiq_ipea_result_window(res.get(), &e_min, &e_max, &e_shift, &omega,
                            &kval);
  double energy = fermiq_ipea_result_energy(res.get());

  nlohmann::json j;
  auto& jb = j["bits"] = nlohmann::json::array();
  for (int k = 0; k < fermiq_ipea_result_bit_count(res.get()); ++k)
    jb.push_back(fermiq_ipea_result_bit(res.get(), k));
  j["phase"] = fermiq_ipea_result_phase(res.get());
  j["energy"] = energy;
  j["window"] = {{"e_min", e_min},
                 {"e_max", e_max},
                 {"e_shift", e_shift},
                 {"omega", omega},
                 {"K", kval}};
  j["seed"] = seed;
  j["bits_count"] = bits;
  if (golden) {
    j["ground_energy"] = *golden;
    j["abs_error"] = std::abs(energy - *golden);
  }
  if (!out_path.empty()) write_text(out_path, j.dump(2) + "\n");
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "bits (j0..j" << bits - 1 << "):";
  for (int k = 0; k < bits; ++k)
    std::cout << " " << fermiq_ipea_result_bit(res.get(), k);
  std::cout << "\nphase: " << fmt(fermiq_ipea_result_phase(res.get()))
            << "\nenergy: " << fmt(energy) << "\nomega: " << fmt(omega)
            << "  K: " << fmt(kval) << "  e_shift: " << fmt(e_shift) << "\n";
  if (golden)
    std::cout << "ground_energy: " << fmt(*golden)
              << "\nabs_error: " << fmt(std::abs(energy - *golden)) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- sweep

int cmd_sweep(const std::string& integrals_path, const std::string& grid_text,
              double t_total, int order, const std::string& metric_name,
              std::optional<double> threshold, const std::string& out_path) {
  std::vector<double> grid;
  {
    std::stringstream ss(grid_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      try {
        grid.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw CliError{kExitUsage, "bad --dt-grid entry '" + tok + "'"};
      }
    }
  }
  if (grid.empty()) throw CliError{kExitUsage, "empty --dt-grid"};
  fermiq_metric metric;
  if (metric_name == "ground_energy")
    metric = FERMIQ_METRIC_GROUND_ENERGY;
  else if (metric_name == "operator_norm")
    metric = FERMIQ_METRIC_OPERATOR_NORM;
  else
    throw CliError{kExitUsage, "unknown --metric '" + metric_name + "'"};

  Integrals t = load(integrals_path);
  Grouped g;
  check(fermiq_group_hamiltonian(t.get(), g.out()), "group");

  std::ostringstream csv;
  csv << "# fermiq sweep schema v1: trotter_number,dt,gate_count,"
         "energy_estimate,abs_error\n";
  csv << "# time=" << fmt(t_total) << " order=" << order
      << " metric=" << metric_name << "\n";
  std::optional<double> first_dt_meeting;
  for (double dt : grid) {
    if (dt <= 0) throw CliError{kExitUsage, "dt grid values must be positive"};
    long long full = static_cast<long long>(std::floor(t_total / dt + 1e-12));
    double rem = t_total - static_cast<double>(full) * dt;
    long long trotter_number =
        full + (rem > 1e-12 * std::max(1.0, t_total) ? 1 : 0);
    CircuitH circ;
    check(fermiq_compile_trotter(g.get(), t_total, dt, order, circ.out()),
          "compile");
    double energy = 0, err = 0;
    check(fermiq_trotter_energy_estimate(g.get(), t_total, dt, order, &energy),
          "energy estimate");
    check(fermiq_trotter_error(g.get(), t_total, dt, order, metric, &err),
          "trotter error");
    if (threshold && !first_dt_meeting && err < *threshold)
      first_dt_meeting = dt;
    csv << trotter_number << "," << fmt(dt) << ","
        << fermiq_circuit_gate_count(circ.get()) << "," << fmt(energy) << ","
        << fmt(err) << "\n";
  }
  if (threshold) {
    if (first_dt_meeting)
      csv << "# threshold=" << fmt(*threshold)
          << " first_dt=" << fmt(*first_dt_meeting) << "\n";
    else
      csv << "# threshold=" << fmt(*threshold) << " first_dt=none\n";
  }
  std::cout << csv.str();
  if (!out_path.empty()) write_text(out_path, csv.str());
  if (threshold && !first_dt_meeting) return kExitThreshold;
  return kExitOk;
}

// ---------------------------------------------------------------- asp

int cmd_asp(const std::string& integrals_path, double total_time, int steps,
            const std::string& mode_name, double dt_inner,
            const std::string& out_path) {
  fermiq_asp_mode mode;
  if (mode_name == "oracle")
    mode = FERMIQ_ASP_ORACLE;
  else if (mode_name == "circuit")
    mode = FERMIQ_ASP_CIRCUIT;
  else
    throw CliError{kExitUsage, "unknown --mode '" + mode_name + "'"};
  if (total_time < 0) throw CliError{kExitUsage, "--T must be >= 0"};
  if (steps < 1) throw CliError{kExitUsage, "--steps must be >= 1"};

  Integrals t = load(integrals_path);
  Operator h;
  check(fermiq_build_hamiltonian(t.get(), h.out()), "build");
  AspRes res;
  check(fermiq_asp_run(h.get(), total_time, steps, mode, dt_inner, res.out()),
        "asp");

  std::ostringstream csv;
  csv << "# fermiq asp schema v1: s,overlap,gap,degenerate\n";
  for (int k = 0; k < fermiq_asp_row_count(res.get()); ++k) {
    double s, overlap, gap;
    int degen;
    fermiq_asp_row(res.get(), k, &s, &overlap, &gap, &degen);
    csv << fmt(s) << "," << fmt(overlap) << "," << fmt(gap) << "," << degen
        << "\n";
  }
  csv << "# final_overlap=" << fmt(fermiq_asp_final_overlap(res.get()))
      << " min_gap=" << fmt(fermiq_asp_min_gap(res.get())) << "\n";
  std::cout << csv.str();
  if (!out_path.empty()) write_text(out_path, csv.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fermiq: electronic-structure quantum simulation workbench"};
  app.require_subcommand(1);

  std::string integrals, out_path, state_kind = "exact", state_file,
                                   metric = "ground_energy",
                                   mode = "oracle",
                                   grid = "0.8,0.4,0.2,0.1,0.05,0.025";
  bool as_json = false, appendix = false;
  double dt = 0.1, t_total = 1.0, margin = 0.5, asp_time = 100.0,
         dt_inner = 0.05;
  double ipea_dt = 0.0;
  int order = 1, bits = 10, steps = 100;
  uint64_t seed = 0;
  std::optional<double> threshold;

  auto add_common = [&](CLI::App* sub, bool with_json = true) {
    sub->add_option("--integrals", integrals, "integrals file path")
        ->required();
    sub->add_option("--out", out_path, "write the report/artifact here");
    if (with_json) sub->add_flag("--json", as_json, "JSON output on stdout");
  };

  auto* s_exact = app.add_subcommand("exact", "dense spectrum oracle");
  add_common(s_exact);

  auto* s_compile = app.add_subcommand("compile", "emit a gate circuit");
  add_common(s_compile, false);
  s_compile->add_option("--dt", dt, "Trotter step (a.u.)");
  s_compile->add_option("--time", t_total, "total evolution time (a.u.)");
  s_compile->add_option("--order", order, "Trotter order (1 or 2)");
  s_compile->add_flag("--appendix", appendix,
                      "hand-scheduled 4-orbital reference program");

  auto* s_ipea = app.add_subcommand("ipea", "iterative phase estimation");
  add_common(s_ipea);
  s_ipea->add_option("--bits", bits, "number of phase bits");
  s_ipea->add_option("--dt", ipea_dt,
                     "Trotter step for compiled propagators (0: exact oracle)");
  s_ipea->add_option("--order", order, "Trotter order for compiled mode");
  s_ipea->add_option("--seed", seed, "measurement RNG seed");
  s_ipea->add_option("--state", state_kind, "initial state: hf|exact|file");
  s_ipea->add_option("--state-file", state_file, "state JSON (with --state file)");
  s_ipea->add_option("--margin", margin, "energy window margin (a.u.)");

  auto* s_sweep = app.add_subcommand("sweep", "Trotter-error sweep (CSV)");
  add_common(s_sweep, false);
  s_sweep->add_option("--dt-grid", grid, "comma-separated dt values");
  s_sweep->add_option("--time", t_total, "total evolution time (a.u.)");
  s_sweep->add_option("--order", order, "Trotter order (1 or 2)");
  s_sweep->add_option("--metric", metric, "ground_energy|operator_norm");
  double threshold_value = 0;
  auto* thr = s_sweep->add_option("--threshold", threshold_value,
                                  "target error (exit 4 if unmet)");

  auto* s_asp = app.add_subcommand("asp", "adiabatic preparation trace (CSV)");
  add_common(s_asp, false);
  s_asp->add_option("--T", asp_time, "total evolution time (a.u.)");
  s_asp->add_option("--steps", steps, "schedule steps");
  s_asp->add_option("--mode", mode, "oracle|circuit");
  s_asp->add_option("--dt-inner", dt_inner, "inner Trotter step (circuit mode)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  if (thr->count() > 0) threshold = threshold_value;

  try {
    if (s_exact->parsed()) return cmd_exact(integrals, as_json, out_path);
    if (s_compile->parsed()) {
      if (order != 1 && order != 2)
        throw CliError{kExitUsage, "--order must be 1 or 2"};
      return cmd_compile(integrals, t_total, dt, order, appendix, out_path);
    }
    if (s_ipea->parsed()) {
      if (bits < 1) throw CliError{kExitUsage, "--bits must be >= 1"};
      return cmd_ipea(integrals, bits, ipea_dt, order, seed, state_kind,
                      state_file, margin, as_json, out_path);
    }
    if (s_sweep->parsed())
      return cmd_sweep(integrals, grid, t_total, order, metric, threshold,
                       out_path);
    if (s_asp->parsed())
      return cmd_asp(integrals, asp_time, steps, mode, dt_inner, out_path);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContract;
  }
  return kExitUsage;
}
