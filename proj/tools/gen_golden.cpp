// Regenerates the golden-constant fixture for the bundled integrals.
// Usage: fermiq_gen_golden <integrals file>   (JSON on stdout)
//
// Run once and commit the output as data/h2_golden.json; acceptance tests
// compare against the committed fixture, never against retyped numbers.

#include <cstdio>
#include <iostream>

#include <json.hpp>

#include "fermion.hpp"
#include "integrals.hpp"
#include "spectral.hpp"
#include "statevector.hpp"

using namespace fermiq;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: fermiq_gen_golden <integrals file>\n";
    return 1;
  }
  try {
    IntegralTable table = load_integrals_file(argv[1]);
    PauliSum h = build_hamiltonian(table);
    GroupedHamiltonian g = group_hamiltonian(table);
    SpectralDecomposition d = diagonalize(h);
    int n = h.n_qubits();

    nlohmann::json j;
    j["version"] = 1;
    j["n_qubits"] = n;
    auto& ev = j["eigenvalues"] = nlohmann::json::array();
    for (Eigen::Index k = 0; k < d.eigenvalues.size(); ++k)
      ev.push_back(d.eigenvalues(k));
    j["fci_energy"] = d.eigenvalues(0);
    j["first_excited_energy"] = d.eigenvalues(1);
    j["gap"] = d.eigenvalues(1) - d.eigenvalues(0);

    StateVector ground = d.eigenstate(0, n);
    std::uint64_t hf = diagonal_ground_index(h.diagonal_part());
    StateVector hf_state = StateVector::basis_state(n, hf);
    j["hf_index"] = hf;
    j["hf_overlap"] = std::norm(ground.inner(hf_state));
    j["coefficient_one_norm"] = h.one_norm();

    j["theta_total"] = g.theta_total;
    for (const auto& [p, v] : g.theta_p) j["theta_p"][std::to_string(p)] = v;
    for (const auto& [pq, v] : g.eta)
      j["eta"][std::to_string(pq.first) + "," + std::to_string(pq.second)] = v;
    for (const auto& quad : g.quadruples)
      j["quadruples"].push_back({{"pqrs", quad.pqrs},
                                 {"h1", quad.h1},
                                 {"h2", quad.h2},
                                 {"h3", quad.h3}});

    // adiabatic-path minimum gap on a fine grid
    double min_gap = 1e300;
    for (int k = 0; k <= 200; ++k) {
      double s = k / 200.0;
      SpectralDecomposition ds = diagonalize(build_path(h, s));
      min_gap = std::min(min_gap, ds.eigenvalues(1) - ds.eigenvalues(0));
    }
    j["path_min_gap"] = min_gap;

    std::cout << j.dump(2) << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
