#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pauli.hpp"
#include "test_util.hpp"

using namespace fermiq;
using namespace fermiq::test;

TEST_CASE("single-qubit products") {
  auto [phase, out] = pauli_mul(PauliString("X"), PauliString("Y"));
  CHECK(phase == Complex(0, 1));
  CHECK(out == PauliString("Z"));

  auto [p2, o2] = pauli_mul(PauliString("Z"), PauliString("Z"));
  CHECK(p2 == Complex(1, 0));
  CHECK(o2.is_identity());

  auto [p3, o3] = pauli_mul(PauliString("XI"), PauliString("IZ"));
  CHECK(p3 == Complex(1, 0));
  CHECK(o3 == PauliString("XZ"));
}

TEST_CASE("length mismatch is a dimension error") {
  CHECK_THROWS_AS(pauli_mul(PauliString("X"), PauliString("XY")),
                  DimensionError);
  PauliSum a(2), b(3);
  CHECK_THROWS_AS(a + b, DimensionError);
  CHECK_THROWS_AS(a * b, DimensionError);
}

TEST_CASE("product matrices match the matrix oracle") {
  std::mt19937_64 rng(1234);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      PauliString a = random_string(rng, n), b = random_string(rng, n);
      auto [phase, out] = pauli_mul(a, b);
      PauliSum sa(n), sb(n), so(n);
      sa.add_term(a, 1.0);
      sb.add_term(b, 1.0);
      so.add_term(out, phase);
      CHECK(matrices_close(sa.to_matrix() * sb.to_matrix(), so.to_matrix(),
                           1e-14));
    }
  }
}

TEST_CASE("cancellation leaves an empty canonical sum") {
  PauliSum s(1);
  s.add_term(PauliString("Z"), 1.0);
  s.add_term(PauliString("Z"), -1.0);
  CHECK(s.empty());
}

TEST_CASE("sigma- times sigma+ is the occupation projector") {
  // sigma- = (X - iY)/2, sigma+ = (X + iY)/2; product |1><1| = (I - Z)/2
  PauliSum minus(1), plus(1);
  minus.add_term(PauliString("X"), 0.5);
  minus.add_term(PauliString("Y"), Complex(0, -0.5));
  plus.add_term(PauliString("X"), 0.5);
  plus.add_term(PauliString("Y"), Complex(0, 0.5));

  PauliSum prod = minus * plus;
  CHECK(prod.coefficient(PauliString("I")) == Complex(0.5, 0));
  CHECK(prod.coefficient(PauliString("Z")) == Complex(-0.5, 0));
  CHECK(prod.term_count() == 2);

  // and the reverse order gives the hole projector (I + Z)/2
  PauliSum rev = plus * minus;
  CHECK(rev.coefficient(PauliString("Z")) == Complex(0.5, 0));

  Matrix m = prod.to_matrix();
  CHECK(m(0, 0) == Complex(0, 0));
  CHECK(m(1, 1) == Complex(1, 0));
}

TEST_CASE("squaring a Hermitian sum keeps coefficients real") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    PauliSum h(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int k = 0; k < 6; ++k) h.add_term(random_string(rng, 3), u(rng));
    PauliSum sq = h * h;
    CHECK(sq.max_imag() <= 1e-13);
  }
}

TEST_CASE("to_matrix basics") {
  PauliSum z(1);
  z.add_term(PauliString("Z"), 1.0);
  Matrix m = z.to_matrix();
  CHECK(m(0, 0) == Complex(1, 0));
  CHECK(m(1, 1) == Complex(-1, 0));
  CHECK(m(0, 1) == Complex(0, 0));

  PauliSum proj(1);
  proj.add_term(PauliString("I"), 0.5);
  proj.add_term(PauliString("Z"), -0.5);
  Matrix p = proj.to_matrix();
  CHECK(p(0, 0) == Complex(0, 0));
  CHECK(p(1, 1) == Complex(1, 0));
}

TEST_CASE("to_matrix of a Hermitian sum is Hermitian") {
  std::mt19937_64 rng(99);
  PauliSum h(4);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < 10; ++k) h.add_term(random_string(rng, 4), u(rng));
  Matrix m = h.to_matrix();
  CHECK(max_abs_diff(m, m.adjoint()) <= 1e-14);
}

TEST_CASE("to_matrix respects the qubit cap") {
  CHECK_THROWS_AS(PauliSum::identity(13).to_matrix(), ResourceError);
}

TEST_CASE("qubit 1 is the leftmost tensor factor") {
  // Z on qubit 1 of two: diag(1, 1, -1, -1)
  PauliSum z1(2);
  z1.add_term(PauliString(2, 1, Pauli::Z), 1.0);
  Matrix m = z1.to_matrix();
  CHECK(m(0, 0) == Complex(1, 0));
  CHECK(m(1, 1) == Complex(1, 0));
  CHECK(m(2, 2) == Complex(-1, 0));
  CHECK(m(3, 3) == Complex(-1, 0));
}

TEST_CASE("associativity and distributivity via the matrix oracle") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);  // 2..4
    PauliSum a = random_sum(rng, n, 3), b = random_sum(rng, n, 3),
             c = random_sum(rng, n, 3);
    Matrix ma = a.to_matrix(), mb = b.to_matrix(), mc = c.to_matrix();
    CHECK(matrices_close(((a + b) + c).to_matrix(), ma + mb + mc, 1e-12));
    CHECK(matrices_close(((a * b) * c).to_matrix(), (a * (b * c)).to_matrix(),
                         1e-12));
    CHECK(matrices_close((a * (b + c)).to_matrix(),
                         (a * b + a * c).to_matrix(), 1e-12));
    CHECK(matrices_close((a * b).to_matrix(), ma * mb, 1e-12));
  }
}

TEST_CASE("canonicalization is idempotent") {
  std::mt19937_64 rng(5);
  PauliSum a = random_sum(rng, 3, 8);
  PauliSum b = a;
  b += PauliSum(3);  // identity-touch
  CHECK(a == b);
  // rebuilding from its own terms gives the same map
  PauliSum c(3);
  for (const auto& [s, v] : a.terms()) c.add_term(s, v);
  CHECK(a == c);
}

TEST_CASE("pruning threshold") {
  PauliSum s(1);
  s.add_term(PauliString("X"), 1e-15);
  CHECK(s.empty());
  s.add_term(PauliString("X"), 1.0);
  s.add_term(PauliString("X"), -1.0 + 1e-16);
  CHECK(s.empty());
}
