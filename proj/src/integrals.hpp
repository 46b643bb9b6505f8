#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"

namespace fermiq {

enum class Spin : std::uint8_t { Alpha, Beta };

/**
 * One- and two-electron integrals over spin orbitals (atomic units), plus
 * spin labels and an optional constant energy shift.
 *
 * Index convention for h2: h(p,q,r,s) multiplies a+_p a+_q a_r a_s in the
 * Hamiltonian, with the two-electron 1/2 prefactor applied by the lowering
 * stage, not stored here. Stored values are symmetry-completed:
 *   - always: the index-exchange + Hermitian closure
 *     {pqrs, qpsr, srqp, rspq} share one value,
 *   - with the real-orbital flag: the full 8-fold orbit (additionally
 *     p<->s and q<->r swaps).
 * h1 is kept symmetric (h_pq == h_qp).
 */
class IntegralTable {
 public:
  using Quad = std::array<int, 4>;

  IntegralTable(int n_spin_orbitals, bool real_orbital_symmetry = false);

  int n_spin_orbitals() const { return n_; }
  bool real_orbital_symmetry() const { return real8_; }

  Spin spin(int p) const;
  void set_spin(int p, Spin s);

  double energy_shift() const { return shift_; }
  void set_energy_shift(double v) { shift_ = v; }

  /// Records h_pq (and h_qp). Conflicting re-assignment throws ContractError.
  void set_h1(int p, int q, double v);
  /// Records h_pqrs and its symmetry orbit. Conflicts throw ContractError.
  void set_h2(int p, int q, int r, int s, double v);

  double h1(int p, int q) const;
  double h2(int p, int q, int r, int s) const;

  /// h2 value with the spin-orthogonality screen: zero unless
  /// spin(p)==spin(s) and spin(q)==spin(r).
  double h2_screened(int p, int q, int r, int s) const;

  const std::map<std::pair<int, int>, double>& h1_entries() const {
    return h1_;
  }
  const std::map<Quad, double>& h2_entries() const { return h2_; }

  /// Symmetry orbit of a quadruple under the active closure group.
  std::vector<Quad> symmetry_orbit(Quad t) const;

  void check_index(int p) const;

 private:
  int n_;
  bool real8_;
  double shift_ = 0.0;
  std::vector<Spin> spins_;
  std::map<std::pair<int, int>, double> h1_;
  std::map<Quad, double> h2_;
};

/**
 * Parses the integrals text format:
 *
 *   # comment
 *   norb <n>              required first directive
 *   spin <p> <a|b>        optional; default alternates a,b,a,b,...
 *   eshift <real>         optional constant shift, default 0
 *   symmetry real8        optional 8-fold real-orbital completion
 *   h1 <p> <q> <real>
 *   h2 <p> <q> <r> <s> <real>
 *
 * Throws ParseError (with line number) on unknown directives, out-of-range
 * indices, or conflicting duplicate values.
 */
IntegralTable load_integrals(std::istream& in);
IntegralTable load_integrals_file(const std::string& path);
IntegralTable load_integrals_string(const std::string& text);

}  // namespace fermiq
