#pragma once

#include <array>
#include <map>
#include <vector>

#include "integrals.hpp"
#include "pauli.hpp"

namespace fermiq {

enum class LadderKind : std::uint8_t { Create, Annihilate };

struct LadderOp {
  int orbital;
  LadderKind kind;
};

/// A weighted product of ladder operators, applied left to right as written
/// (ops[0] is the leftmost factor).
struct LadderTerm {
  Complex coefficient;
  std::vector<LadderOp> ops;
};

/**
 * Jordan-Wigner image of a single ladder operator on n modes:
 *   annihilate(j) -> I^(j-1) (x) sigma+ (x) Z^(n-j)
 *   create(j)     -> I^(j-1) (x) sigma- (x) Z^(n-j)
 * with sigma+ = (X+iY)/2 = |0><1| and sigma- = (X-iY)/2 = |1><0|
 * (|1> = occupied).
 */
PauliSum jw_lower_ladder(LadderOp op, int n);

/// Lowers coefficient * (product of ladder ops), canonicalized.
PauliSum jw_lower_term(const LadderTerm& t, int n);

/// Hermitian second-quantized operator classes with closed-form lowerings.
enum class TermClass {
  Number,            // h a+_p a_p                      indices {p}
  Excitation,        // h a+_p a_q + h* a+_q a_p        indices {p, q}, p > q
  CoulombExchange,   // h a+_p a+_q a_q a_p             indices {p, q}, p > q
  NumberExcitation,  // h a+_p a+_q a_q a_r + h.c.      indices {p, q, r}, p > r
  DoubleExcitation,  // h a+_p a+_q a_r a_s + h.c.      indices {p,q,r,s}, p>q>r>s
};

/**
 * The ordered (string, coefficient) blocks of the closed-form lowering.
 * Block order is the canonical circuit-emission order (X-basis passes before
 * Y-basis passes; the double-excitation family follows the standard
 * eight-quadruplet order with odd-Y strings appended for complex h).
 */
std::vector<std::pair<PauliString, Complex>> template_blocks(
    TermClass cls, const std::vector<int>& indices, Complex h, int n);

/// Closed-form lowering of one operator class; must agree with the generic
/// jw_lower_term route exactly. Throws ContractError on ordering violations.
PauliSum template_lower(TermClass cls, const std::vector<int>& indices,
                        Complex h, int n);

/**
 * Full Hamiltonian lowering:
 *   H = sum_pq h_pq a+_p a_q
 *     + 1/2 sum_pqrs h~_pqrs a+_p a+_q a_r a_s
 *     + energy_shift * I
 * where h~ carries the spin-orthogonality screen (zero unless
 * spin(p)==spin(s) and spin(q)==spin(r)). Result is Hermitian and canonical.
 */
PauliSum build_hamiltonian(const IntegralTable& t);

struct NumberTerm {
  int p;
  double h;
};
struct ExcitationTerm {
  int p, q;  // p > q
  double h;
};
struct CoulombExchangeTerm {
  int p, q;  // p < q
  double c;  // h_pqqp - h_pqpq * delta(spin_p, spin_q)
};
struct NumberExcitationTerm {
  int p, q, r;  // p > r, q not in {p, r}
  double h;
};
/// One pairing of a four-distinct-index family: h * a+_p a+_q a_r a_s + h.c.
/// with p = max index, q the other creation index, r > s the annihilations.
struct DoubleExcitationTerm {
  int p, q, r, s;
  double h;
};
/// Sign-resolved pairing coefficients of one index quadruple (descending
/// p>q>r>s): h1 pairs creation {p,q}, h2 pairs {p,s}, h3 pairs {p,r} with
/// the conventional sign flip.
struct QuadrupleCoefficients {
  std::array<int, 4> pqrs;
  double h1, h2, h3;
};

/**
 * The Hamiltonian partitioned into the five closed-form classes, plus the
 * number-number aggregates theta_total (the identity weight), theta_p (per-
 * qubit Z rates, Z coefficient is -theta_p/4) and eta_pq (ZZ weights).
 * Lowering the parts and summing reproduces build_hamiltonian.
 */
struct GroupedHamiltonian {
  int n_qubits = 0;
  double energy_shift = 0;
  std::vector<NumberTerm> number_terms;
  std::vector<ExcitationTerm> excitation_terms;
  std::vector<CoulombExchangeTerm> coulomb_exchange_terms;
  std::vector<NumberExcitationTerm> number_excitation_terms;
  std::vector<DoubleExcitationTerm> double_excitation_terms;
  double theta_total = 0;
  std::map<int, double> theta_p;
  std::map<std::pair<int, int>, double> eta;  // keyed p < q
  std::vector<QuadrupleCoefficients> quadruples;
};

GroupedHamiltonian group_hamiltonian(const IntegralTable& t);

/// Lowers every grouped part and sums; equals build_hamiltonian.
PauliSum lower_grouped(const GroupedHamiltonian& g);

/// Aggregate Pauli form of one double-excitation quadruple family (all of its
/// pairing terms summed), used for circuit emission.
PauliSum lower_double_excitation_family(const GroupedHamiltonian& g,
                                        const std::array<int, 4>& pqrs_desc);

}  // namespace fermiq
