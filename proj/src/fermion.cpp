#include "fermion.hpp"

#include <algorithm>
#include <cmath>

namespace fermiq {

PauliSum jw_lower_ladder(LadderOp op, int n) {
  if (op.orbital < 1 || op.orbital > n)
    throw DimensionError("ladder orbital " + std::to_string(op.orbital) +
                         " out of range 1.." + std::to_string(n));
  int j = op.orbital;
  PauliString xs(n), ys(n);
  xs = xs.with_letter(j, Pauli::X);
  ys = ys.with_letter(j, Pauli::Y);
  for (int k = j + 1; k <= n; ++k) {
    xs = xs.with_letter(k, Pauli::Z);
    ys = ys.with_letter(k, Pauli::Z);
  }
  // annihilate: sigma+ = (X + iY)/2, create: sigma- = (X - iY)/2
  Complex yc = (op.kind == LadderKind::Annihilate) ? Complex(0, 0.5)
                                                   : Complex(0, -0.5);
  PauliSum out(n);
  out.add_term(xs, 0.5);
  out.add_term(ys, yc);
  return out;
}

PauliSum jw_lower_term(const LadderTerm& t, int n) {
  PauliSum out = PauliSum::identity(n, t.coefficient);
  for (const auto& op : t.ops) out = out * jw_lower_ladder(op, n);
  return out;
}

namespace {

void check_range(const std::vector<int>& idx, int n) {
  for (int i : idx)
    if (i < 1 || i > n)
      throw DimensionError("orbital index " + std::to_string(i) +
                           " out of range 1.." + std::to_string(n));
}

PauliString z_string(int n, int lo, int hi) {  // Z on qubits lo+1 .. hi-1
  PauliString s(n);
  for (int k = lo + 1; k < hi; ++k) s = s.with_letter(k, Pauli::Z);
  return s;
}

// The hopping bracket on (r -> p), r < p, including the Z string:
//   (1/2) Z(r+1..p-1) [ Re h (X_r X_p + Y_r Y_p) + Im h (X_r Y_p - Y_r X_p) ]
// emitted X-pass first.
void excitation_blocks(std::vector<std::pair<PauliString, Complex>>& out,
                       int p, int r, Complex h, int n, Complex scale) {
  PauliString zs = z_string(n, r, p);
  auto put = [&](Pauli a, Pauli b, double c) {
    if (std::abs(c * scale) < kCoefficientEps) return;
    out.emplace_back(zs.with_letter(r, a).with_letter(p, b), c * scale);
  };
  put(Pauli::X, Pauli::X, 0.5 * h.real());
  put(Pauli::Y, Pauli::Y, 0.5 * h.real());
  put(Pauli::X, Pauli::Y, 0.5 * h.imag());
  put(Pauli::Y, Pauli::X, -0.5 * h.imag());
}

// Double-excitation family signs for letters in ascending qubit order
// (s, r, q, p); derived from the sigma+/- expansion and verified against the
// generic lowering. Even-Y strings carry Re h, odd-Y strings carry Im h.
struct FamilyEntry {
  const char* letters;  // at (p, q, r, s) in descending-index order
  int sign;
};
// Canonical emission order of the even-Y quadruplets, (M1,M2,M3,M4) on
// (p,q,r,s) with H->X, Y->Y.
constexpr FamilyEntry kEvenFamily[8] = {
    {"XXXX", -1}, {"YYYY", -1}, {"XYXY", -1}, {"YXYX", -1},
    {"YYXX", +1}, {"XXYY", +1}, {"YXXY", -1}, {"XYYX", -1},
};
constexpr FamilyEntry kOddFamily[8] = {
    {"XXXY", +1}, {"XXYX", +1}, {"XYXX", -1}, {"YXXX", -1},
    {"XYYY", +1}, {"YXYY", +1}, {"YYXY", -1}, {"YYYX", -1},
};

}  // namespace

std::vector<std::pair<PauliString, Complex>> template_blocks(
    TermClass cls, const std::vector<int>& indices, Complex h, int n) {
  std::vector<std::pair<PauliString, Complex>> out;
  check_range(indices, n);
  switch (cls) {
    case TermClass::Number: {
      if (indices.size() != 1) throw ContractError("number term takes {p}");
      int p = indices[0];
      out.emplace_back(PauliString(n), 0.5 * h);
      out.emplace_back(PauliString(n, p, Pauli::Z), -0.5 * h);
      break;
    }
    case TermClass::Excitation: {
      if (indices.size() != 2 || indices[0] <= indices[1])
        throw ContractError("excitation term takes {p, q} with p > q");
      excitation_blocks(out, indices[0], indices[1], h, n, 1.0);
      break;
    }
    case TermClass::CoulombExchange: {
      if (indices.size() != 2 || indices[0] <= indices[1])
        throw ContractError("coulomb term takes {p, q} with p > q");
      int p = indices[0], q = indices[1];
      out.emplace_back(PauliString(n), 0.25 * h);
      out.emplace_back(PauliString(n, q, Pauli::Z), -0.25 * h);
      out.emplace_back(PauliString(n, p, Pauli::Z), -0.25 * h);
      out.emplace_back(PauliString(n, q, Pauli::Z).with_letter(p, Pauli::Z),
                       0.25 * h);
      break;
    }
    case TermClass::NumberExcitation: {
      if (indices.size() != 3)
        throw ContractError("number-excitation term takes {p, q, r}");
      int p = indices[0], q = indices[1], r = indices[2];
      if (p <= r || q == p || q == r)
        throw ContractError(
            "number-excitation requires p > r and q distinct from both");
      // (1/4) ZS [B - Z_q B]: per bracket string, the plain block then the
      // Z_q-multiplied block.
      std::vector<std::pair<PauliString, Complex>> bracket;
      excitation_blocks(bracket, p, r, h, n, 0.5);
      for (const auto& [s, c] : bracket) {
        out.emplace_back(s, c);
        auto [ph, sq] = pauli_mul(s, PauliString(n, q, Pauli::Z));
        out.emplace_back(sq, -c * ph);
      }
      break;
    }
    case TermClass::DoubleExcitation: {
      if (indices.size() != 4)
        throw ContractError("double-excitation term takes {p, q, r, s}");
      int p = indices[0], q = indices[1], r = indices[2], s = indices[3];
      if (!(p > q && q > r && r > s))
        throw ContractError("double-excitation requires p > q > r > s");
      auto [zphase, zs] = pauli_mul(z_string(n, s, r), z_string(n, q, p));
      (void)zphase;  // disjoint Z strings, always +1
      auto put = [&](const FamilyEntry& e, double c) {
        if (std::abs(c) < kCoefficientEps) return;
        PauliString str = zs;
        const int qubits[4] = {p, q, r, s};
        for (int i = 0; i < 4; ++i)
          str = str.with_letter(qubits[i], pauli_from_char(e.letters[i]));
        out.emplace_back(str, c);
      };
      for (const auto& e : kEvenFamily) put(e, e.sign * h.real() / 8.0);
      for (const auto& e : kOddFamily) put(e, e.sign * h.imag() / 8.0);
      break;
    }
  }
  std::erase_if(out, [](const auto& b) {
    return std::abs(b.second) < kCoefficientEps;
  });
  return out;
}

PauliSum template_lower(TermClass cls, const std::vector<int>& indices,
                        Complex h, int n) {
  PauliSum out(n);
  for (const auto& [s, c] : template_blocks(cls, indices, h, n))
    out.add_term(s, c);
  return out;
}

PauliSum build_hamiltonian(const IntegralTable& t) {
  int n = t.n_spin_orbitals();
  PauliSum ham(n);
  for (const auto& [pq, v] : t.h1_entries()) {
    if (v == 0.0) continue;
    ham += jw_lower_term({v,
                          {{pq.first, LadderKind::Create},
                           {pq.second, LadderKind::Annihilate}}},
                         n);
  }
  for (const auto& [quad, v] : t.h2_entries()) {
    auto [p, q, r, s] = quad;
    double vs = t.h2_screened(p, q, r, s);
    if (vs == 0.0) continue;
    if (p == q || r == s) continue;  // nilpotent
    ham += jw_lower_term({0.5 * vs,
                          {{p, LadderKind::Create},
                           {q, LadderKind::Create},
                           {r, LadderKind::Annihilate},
                           {s, LadderKind::Annihilate}}},
                         n);
  }
  if (t.energy_shift() != 0.0)
    ham += PauliSum::identity(n, t.energy_shift());
  return ham;
}

GroupedHamiltonian group_hamiltonian(const IntegralTable& t) {
  int n = t.n_spin_orbitals();
  GroupedHamiltonian g;
  g.n_qubits = n;
  g.energy_shift = t.energy_shift();

  for (int p = 1; p <= n; ++p) {
    double v = t.h1(p, p);
    if (v != 0.0) g.number_terms.push_back({p, v});
  }
  for (int p = 2; p <= n; ++p)
    for (int q = 1; q < p; ++q) {
      double v = t.h1(p, q);
      if (v != 0.0) g.excitation_terms.push_back({p, q, v});
    }

  // Number-number aggregates over unordered pairs.
  std::map<std::pair<int, int>, double> c_pq;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      double c = t.h2_screened(p, q, q, p) - t.h2_screened(p, q, p, q);
      if (c != 0.0) c_pq[{p, q}] = c;
    }
  double theta_total = 0;
  for (const auto& [pq, c] : c_pq) {
    theta_total += c / 4.0;
    g.coulomb_exchange_terms.push_back({pq.first, pq.second, c});
    g.eta[pq] = c / 4.0;
  }
  g.theta_total = theta_total;
  for (int p = 1; p <= n; ++p) {
    double th = 0;
    for (const auto& [pq, c] : c_pq)
      if (pq.first == p || pq.second == p) th += c;
    g.theta_p[p] = th;
  }

  // Number-excitation: creation {p, q}, annihilation {q, r}, p > r.
  auto pairing = [&](int a, int b, int c, int d) {
    // effective coefficient of a+_a a+_b a_c a_d over its four orderings
    return 0.5 * (t.h2_screened(a, b, c, d) - t.h2_screened(a, b, d, c) -
                  t.h2_screened(b, a, c, d) + t.h2_screened(b, a, d, c));
  };
  for (int p = 1; p <= n; ++p)
    for (int r = 1; r < p; ++r)
      for (int q = 1; q <= n; ++q) {
        if (q == p || q == r) continue;
        double c = pairing(p, q, q, r);
        if (c != 0.0) g.number_excitation_terms.push_back({p, q, r, c});
      }

  // Double excitation: three pairings per ascending quadruple i1<i2<i3<i4.
  for (int i1 = 1; i1 <= n; ++i1)
    for (int i2 = i1 + 1; i2 <= n; ++i2)
      for (int i3 = i2 + 1; i3 <= n; ++i3)
        for (int i4 = i3 + 1; i4 <= n; ++i4) {
          double c1 = pairing(i4, i3, i2, i1);
          double c2 = pairing(i4, i2, i3, i1);
          double c3 = pairing(i4, i1, i3, i2);
          if (c1 != 0.0) g.double_excitation_terms.push_back({i4, i3, i2, i1, c1});
          if (c2 != 0.0) g.double_excitation_terms.push_back({i4, i2, i3, i1, c2});
          if (c3 != 0.0) g.double_excitation_terms.push_back({i4, i1, i3, i2, c3});
          if (c1 != 0.0 || c2 != 0.0 || c3 != 0.0)
            g.quadruples.push_back({{i4, i3, i2, i1}, c1, c2, -c3});
        }
  return g;
}

namespace {

/// C * a+_p a+_q a_r a_s + h.c. lowered generically (the pairing entries of
/// three-pairings-per-quadruple form carry arbitrary creation sets, which the
/// sorted closed form does not cover).
PauliSum lower_pairing(const DoubleExcitationTerm& d, int n) {
  LadderTerm fwd{d.h,
                 {{d.p, LadderKind::Create},
                  {d.q, LadderKind::Create},
                  {d.r, LadderKind::Annihilate},
                  {d.s, LadderKind::Annihilate}}};
  LadderTerm rev{d.h,
                 {{d.s, LadderKind::Create},
                  {d.r, LadderKind::Create},
                  {d.q, LadderKind::Annihilate},
                  {d.p, LadderKind::Annihilate}}};
  return jw_lower_term(fwd, n) + jw_lower_term(rev, n);
}

}  // namespace

PauliSum lower_grouped(const GroupedHamiltonian& g) {
  int n = g.n_qubits;
  PauliSum out(n);
  for (const auto& term : g.number_terms)
    out += template_lower(TermClass::Number, {term.p}, term.h, n);
  for (const auto& term : g.excitation_terms)
    out += template_lower(TermClass::Excitation, {term.p, term.q}, term.h, n);
  for (const auto& term : g.coulomb_exchange_terms)
    out += template_lower(TermClass::CoulombExchange, {term.q, term.p}, term.c,
                          n);
  for (const auto& term : g.number_excitation_terms)
    out += template_lower(TermClass::NumberExcitation,
                          {term.p, term.q, term.r}, term.h, n);
  for (const auto& term : g.double_excitation_terms)
    out += lower_pairing(term, n);
  if (g.energy_shift != 0.0) out += PauliSum::identity(n, g.energy_shift);
  return out;
}

PauliSum lower_double_excitation_family(const GroupedHamiltonian& g,
                                        const std::array<int, 4>& pqrs_desc) {
  PauliSum out(g.n_qubits);
  for (const auto& d : g.double_excitation_terms) {
    std::array<int, 4> sorted{d.p, d.q, d.r, d.s};
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    if (sorted == pqrs_desc) out += lower_pairing(d, g.n_qubits);
  }
  return out;
}

}  // namespace fermiq
