#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include <Eigen/Eigenvalues>

#include "fermion.hpp"
#include "statevector.hpp"
#include "test_util.hpp"

using namespace fermiq;
using namespace fermiq::test;

namespace {

IntegralTable h2_table() {
  return load_integrals_file(data_path("h2_sto3g_1.401.ints"));
}

// Random real table with physical (8-fold) symmetry; used by the
// grouped-vs-generic and particle-number property tests.
IntegralTable random_table(std::mt19937_64& rng, int n) {
  IntegralTable t(n, true);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int p = 1; p <= n; ++p)
    t.set_spin(p, rng() % 2 ? Spin::Alpha : Spin::Beta);
  for (int p = 1; p <= n; ++p)
    for (int q = p; q <= n; ++q)
      if (rng() % 2) t.set_h1(p, q, u(rng));
  for (int trial = 0; trial < 3 * n; ++trial) {
    int p = 1 + static_cast<int>(rng() % n), q = 1 + static_cast<int>(rng() % n),
        r = 1 + static_cast<int>(rng() % n), s = 1 + static_cast<int>(rng() % n);
    try {
      t.set_h2(p, q, r, s, u(rng));
    } catch (const ContractError&) {
      // conflicting resample of an existing orbit entry; skip
    }
  }
  t.set_energy_shift(u(rng));
  return t;
}

LadderTerm make_term(Complex c, std::initializer_list<std::pair<int, LadderKind>> ops) {
  LadderTerm t{c, {}};
  for (auto [orb, kind] : ops) t.ops.push_back({orb, kind});
  return t;
}

}  // namespace

TEST_CASE("single ladder lowering matches the printed form") {
  // annihilate(1), n=4: X on 1 with Z string, (1/2, i/2) weights
  PauliSum a1 = jw_lower_ladder({1, LadderKind::Annihilate}, 4);
  CHECK(a1.coefficient(PauliString("XZZZ")) == Complex(0.5, 0));
  CHECK(a1.coefficient(PauliString("YZZZ")) == Complex(0, 0.5));
  CHECK(a1.term_count() == 2);

  PauliSum c4 = jw_lower_ladder({4, LadderKind::Create}, 4);
  CHECK(c4.coefficient(PauliString("IIIX")) == Complex(0.5, 0));
  CHECK(c4.coefficient(PauliString("IIIY")) == Complex(0, -0.5));
}

TEST_CASE("ladder lowering matches the sigma-matrix oracle") {
  for (int n = 1; n <= 5; ++n)
    for (int j = 1; j <= n; ++j) {
      CHECK(matrices_close(jw_lower_ladder({j, LadderKind::Annihilate}, n)
                               .to_matrix(),
                           ladder_matrix_oracle(j, false, n), 1e-14));
      CHECK(matrices_close(jw_lower_ladder({j, LadderKind::Create}, n)
                               .to_matrix(),
                           ladder_matrix_oracle(j, true, n), 1e-14));
    }
}

TEST_CASE("anticommutation relations hold for n up to 6") {
  for (int n = 1; n <= 6; ++n) {
    Eigen::Index dim = Eigen::Index{1} << n;
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q) {
        PauliSum ap = jw_lower_ladder({p, LadderKind::Annihilate}, n);
        PauliSum cq = jw_lower_ladder({q, LadderKind::Create}, n);
        PauliSum aq = jw_lower_ladder({q, LadderKind::Annihilate}, n);
        Matrix anti1 = (ap * cq + cq * ap).to_matrix();
        Matrix expect = p == q ? Matrix::Identity(dim, dim).eval()
                               : Matrix::Zero(dim, dim).eval();
        CHECK(max_abs_diff(anti1, expect) <= 1e-13);
        Matrix anti2 = (ap * aq + aq * ap).to_matrix();
        CHECK(anti2.cwiseAbs().maxCoeff() <= 1e-13);
      }
  }
}

TEST_CASE("anticommutator of a_2 and a+_2 on three modes is the identity") {
  PauliSum a = jw_lower_ladder({2, LadderKind::Annihilate}, 3);
  PauliSum c = jw_lower_ladder({2, LadderKind::Create}, 3);
  PauliSum anti = a * c + c * a;
  CHECK(anti.term_count() == 1);
  CHECK(anti.coefficient(PauliString("III")) == Complex(1, 0));
}

TEST_CASE("number and coulomb operators have the textbook forms") {
  PauliSum n1 = jw_lower_term(make_term(1.0, {{1, LadderKind::Create},
                                              {1, LadderKind::Annihilate}}),
                              1);
  CHECK(n1.coefficient(PauliString("I")) == Complex(0.5, 0));
  CHECK(n1.coefficient(PauliString("Z")) == Complex(-0.5, 0));

  PauliSum nn = jw_lower_term(make_term(1.0, {{1, LadderKind::Create},
                                              {2, LadderKind::Create},
                                              {2, LadderKind::Annihilate},
                                              {1, LadderKind::Annihilate}}),
                              2);
  CHECK(nn.coefficient(PauliString("II")) == Complex(0.25, 0));
  CHECK(nn.coefficient(PauliString("ZI")) == Complex(-0.25, 0));
  CHECK(nn.coefficient(PauliString("IZ")) == Complex(-0.25, 0));
  CHECK(nn.coefficient(PauliString("ZZ")) == Complex(0.25, 0));
}

TEST_CASE("nilpotency: repeated annihilation vanishes") {
  PauliSum s = jw_lower_term(make_term(1.0, {{1, LadderKind::Annihilate},
                                             {1, LadderKind::Annihilate}}),
                             3);
  CHECK(s.empty());
}

TEST_CASE("excitation template: the printed 3-qubit example") {
  double h = 0.8125;
  PauliSum t = template_lower(TermClass::Excitation, {3, 1}, h, 3);
  CHECK(t.coefficient(PauliString("XZX")) == Complex(h / 2, 0));
  CHECK(t.coefficient(PauliString("YZY")) == Complex(h / 2, 0));
  CHECK(t.term_count() == 2);
}

TEST_CASE("template ordering contracts") {
  CHECK_THROWS_AS(template_lower(TermClass::Excitation, {1, 3}, 1.0, 3),
                  ContractError);
  CHECK_THROWS_AS(template_lower(TermClass::DoubleExcitation, {4, 3, 1, 2},
                                 1.0, 4),
                  ContractError);
  CHECK_THROWS_AS(template_lower(TermClass::NumberExcitation, {3, 3, 1}, 1.0,
                                 3),
                  ContractError);
  CHECK_THROWS_AS(template_lower(TermClass::CoulombExchange, {2, 2}, 1.0, 2),
                  ContractError);
}

namespace {

PauliSum generic_class_lowering(TermClass cls, const std::vector<int>& idx,
                                Complex h, int n) {
  auto C = LadderKind::Create;
  auto A = LadderKind::Annihilate;
  switch (cls) {
    case TermClass::Number:
      return jw_lower_term(make_term(h, {{idx[0], C}, {idx[0], A}}), n);
    case TermClass::Excitation: {
      PauliSum fwd = jw_lower_term(make_term(h, {{idx[0], C}, {idx[1], A}}), n);
      PauliSum rev = jw_lower_term(
          make_term(std::conj(h), {{idx[1], C}, {idx[0], A}}), n);
      return fwd + rev;
    }
    case TermClass::CoulombExchange:
      return jw_lower_term(
          make_term(h, {{idx[0], C}, {idx[1], C}, {idx[1], A}, {idx[0], A}}),
          n);
    case TermClass::NumberExcitation: {
      PauliSum fwd = jw_lower_term(
          make_term(h, {{idx[0], C}, {idx[1], C}, {idx[1], A}, {idx[2], A}}),
          n);
      PauliSum rev = jw_lower_term(
          make_term(std::conj(h),
                    {{idx[2], C}, {idx[1], C}, {idx[1], A}, {idx[0], A}}),
          n);
      return fwd + rev;
    }
    case TermClass::DoubleExcitation: {
      PauliSum fwd = jw_lower_term(
          make_term(h, {{idx[0], C}, {idx[1], C}, {idx[2], A}, {idx[3], A}}),
          n);
      PauliSum rev = jw_lower_term(
          make_term(std::conj(h),
                    {{idx[3], C}, {idx[2], C}, {idx[1], A}, {idx[0], A}}),
          n);
      return fwd + rev;
    }
  }
  return PauliSum(n);
}

}  // namespace

TEST_CASE("templates agree with generic lowering for random complex inputs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);  // 4..8
    Complex h = random_complex(rng);

    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);

    // number
    {
      std::vector<int> idx{pool[0]};
      CHECK(sum_distance(template_lower(TermClass::Number, idx, h, n),
                         generic_class_lowering(TermClass::Number, idx, h, n)) <=
            1e-13);
    }
    // excitation (p > q)
    {
      std::vector<int> idx{std::max(pool[0], pool[1]),
                           std::min(pool[0], pool[1])};
      CHECK(sum_distance(
                template_lower(TermClass::Excitation, idx, h, n),
                generic_class_lowering(TermClass::Excitation, idx, h, n)) <=
            1e-13);
      // coulomb requires a real (Hermitian) coefficient
      CHECK(sum_distance(
                template_lower(TermClass::CoulombExchange, idx, h.real(), n),
                generic_class_lowering(TermClass::CoulombExchange, idx,
                                       h.real(), n)) <= 1e-13);
    }
    // number-excitation: q inside and outside the (r, p) range
    {
      std::vector<int> three{pool[0], pool[1], pool[2]};
      std::sort(three.begin(), three.end(), std::greater<int>());
      std::vector<int> inside{three[0], three[1], three[2]};
      std::vector<int> outside{three[1], three[0], three[2]};  // q above p
      for (const auto& idx : {inside, outside})
        CHECK(sum_distance(template_lower(TermClass::NumberExcitation, idx, h,
                                          n),
                           generic_class_lowering(TermClass::NumberExcitation,
                                                  idx, h, n)) <= 1e-13);
    }
    // double excitation (p > q > r > s)
    {
      std::vector<int> idx{pool[0], pool[1], pool[2], pool[3]};
      std::sort(idx.begin(), idx.end(), std::greater<int>());
      CHECK(sum_distance(
                template_lower(TermClass::DoubleExcitation, idx, h, n),
                generic_class_lowering(TermClass::DoubleExcitation, idx, h,
                                       n)) <= 1e-13);
    }
  }
}

TEST_CASE("number-excitation: q placement changes only the Z string") {
  // inside: q between r and p; outside: q above p
  PauliSum inside = template_lower(TermClass::NumberExcitation, {4, 2, 1}, 1.0, 4);
  PauliSum outside = template_lower(TermClass::NumberExcitation, {3, 4, 1}, 1.0, 4);
  for (const auto& [s, c] : inside.terms()) {
    CHECK((s.letter(1) != Pauli::I));
    CHECK((s.letter(4) != Pauli::I));
  }
  CHECK(inside.term_count() == outside.term_count());
}

TEST_CASE("one-electron part of the molecular table lowers to number form") {
  auto t = h2_table();
  IntegralTable singles(4);
  for (int p = 1; p <= 4; ++p) singles.set_h1(p, p, t.h1(p, p));
  PauliSum h = build_hamiltonian(singles);
  CHECK(h.coefficient(PauliString("ZIII")) == Complex(1.252477 / 2, 0));
  CHECK(h.coefficient(PauliString("IIIZ")) == Complex(0.475934 / 2, 0));
  double diag_sum = (-1.252477 * 2 - 0.475934 * 2) / 2;
  CHECK(h.coefficient(PauliString("IIII")).real() ==
        doctest::Approx(diag_sum).epsilon(1e-12));
}

TEST_CASE("empty table lowers to the shift times identity") {
  IntegralTable t(3);
  t.set_energy_shift(0.25);
  PauliSum h = build_hamiltonian(t);
  CHECK(h.term_count() == 1);
  CHECK(h.coefficient(PauliString("III")) == Complex(0.25, 0));
}

TEST_CASE("full molecular Hamiltonian matches the golden constants") {
  PauliSum h = build_hamiltonian(h2_table());
  CHECK(h.is_hermitian(1e-13));
  CHECK(h.term_count() == 15);
  CHECK(h.coefficient(PauliString("IIII")).real() ==
        doctest::Approx(-0.812610).epsilon(1e-9));
  CHECK(h.coefficient(PauliString("XXYY")).real() ==
        doctest::Approx(-0.045321750).epsilon(1e-9));
  CHECK(h.coefficient(PauliString("YXXY")).real() ==
        doctest::Approx(0.045321750).epsilon(1e-9));

  SpectralDecomposition d = diagonalize(h);
  // golden FCI electronic ground energy (committed fixture value)
  CHECK(d.eigenvalues(0) == doctest::Approx(-1.851045678445).epsilon(1e-10));
}

TEST_CASE("grouped quantities match brute-force sums for the molecule") {
  auto t = h2_table();
  GroupedHamiltonian g = group_hamiltonian(t);

  // independent brute-force aggregation, literal double loop
  double theta_brute = 0;
  std::map<int, double> theta_p_brute;
  for (int p = 1; p <= 4; ++p)
    for (int q = p + 1; q <= 4; ++q) {
      double exch = t.spin(p) == t.spin(q) ? t.h2(p, q, p, q) : 0.0;
      double c = t.h2(p, q, q, p) - exch;
      theta_brute += c / 4.0;
      theta_p_brute[p] += c;
      theta_p_brute[q] += c;
    }
  CHECK(g.theta_total == doctest::Approx(theta_brute).epsilon(1e-12));
  for (int p = 1; p <= 4; ++p)
    CHECK(g.theta_p.at(p) == doctest::Approx(theta_p_brute[p]).epsilon(1e-12));

  CHECK(g.eta.at({3, 4}) == doctest::Approx(0.697397 / 4).epsilon(1e-12));
  CHECK(g.eta.at({1, 3}) ==
        doctest::Approx((0.663472 - 0.181287) / 4).epsilon(1e-12));
  CHECK(g.eta.at({1, 2}) == doctest::Approx(0.674493 / 4).epsilon(1e-12));

  // the quadruple family: h1 = -h2, h3 = 0
  REQUIRE(g.quadruples.size() == 1);
  CHECK(g.quadruples[0].h1 == doctest::Approx(-0.181287).epsilon(1e-12));
  CHECK(g.quadruples[0].h2 == doctest::Approx(0.181287).epsilon(1e-12));
  CHECK(g.quadruples[0].h3 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("grouped lowering equals the generic route") {
  auto t = h2_table();
  CHECK(sum_distance(lower_grouped(group_hamiltonian(t)),
                     build_hamiltonian(t)) <= 1e-13);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);  // 3..6
    IntegralTable rt = random_table(rng, n);
    CHECK(sum_distance(lower_grouped(group_hamiltonian(rt)),
                       build_hamiltonian(rt)) <= 1e-13);
  }
}

TEST_CASE("Hamiltonian commutes with total particle number") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 3 + static_cast<int>(rng() % 3);
    IntegralTable rt = random_table(rng, n);
    PauliSum h = build_hamiltonian(rt);
    CHECK(h.is_hermitian(1e-13));
    PauliSum number_op(n);
    for (int p = 1; p <= n; ++p) {
      number_op.add_term(PauliString(n), 0.5);
      number_op.add_term(PauliString(n, p, Pauli::Z), -0.5);
    }
    PauliSum comm = h * number_op - number_op * h;
    Matrix m = comm.to_matrix();
    CHECK(m.cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("2-electron-sector restriction reproduces the ground energy") {
  PauliSum h = build_hamiltonian(h2_table());
  Matrix m = h.to_matrix();
  std::vector<Eigen::Index> sector;
  for (Eigen::Index i = 0; i < 16; ++i)
    if (__builtin_popcountll(static_cast<unsigned long long>(i)) == 2)
      sector.push_back(i);
  REQUIRE(sector.size() == 6);
  Matrix sub(6, 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      sub(a, b) = m(sector[static_cast<std::size_t>(a)],
                    sector[static_cast<std::size_t>(b)]);
  Eigen::SelfAdjointEigenSolver<Matrix> es(sub);
  SpectralDecomposition full = diagonalize(h);
  CHECK(es.eigenvalues()(0) ==
        doctest::Approx(full.eigenvalues(0)).epsilon(1e-12));
}
