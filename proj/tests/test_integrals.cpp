#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "integrals.hpp"
#include "test_util.hpp"

using namespace fermiq;
using namespace fermiq::test;

TEST_CASE("index-exchange completion") {
  auto t = load_integrals_string(
      "norb 4\n"
      "h2 1 2 2 1 0.674493\n");
  CHECK(t.h2(1, 2, 2, 1) == doctest::Approx(0.674493));
  CHECK(t.h2(2, 1, 1, 2) == doctest::Approx(0.674493));
  CHECK(t.h2(1, 2, 1, 2) == 0.0);
}

TEST_CASE("hermitian completion pairs pqrs with srqp") {
  auto t = load_integrals_string(
      "norb 4\n"
      "h2 1 2 3 4 0.25\n");
  CHECK(t.h2(1, 2, 3, 4) == doctest::Approx(0.25));
  CHECK(t.h2(2, 1, 4, 3) == doctest::Approx(0.25));  // particle exchange
  CHECK(t.h2(4, 3, 2, 1) == doctest::Approx(0.25));  // hermitian partner
  CHECK(t.h2(3, 4, 1, 2) == doctest::Approx(0.25));
  CHECK(t.h2(4, 2, 3, 1) == 0.0);  // not in the default closure
}

TEST_CASE("real-orbital completion generates the 8-fold orbit") {
  auto t = load_integrals_string(
      "norb 4\n"
      "symmetry real8\n"
      "h2 1 4 2 3 0.181287\n");
  for (auto quad : {std::array{1, 4, 2, 3}, std::array{3, 4, 2, 1},
                    std::array{1, 2, 4, 3}, std::array{3, 2, 4, 1},
                    std::array{4, 1, 3, 2}, std::array{4, 3, 1, 2},
                    std::array{2, 1, 3, 4}, std::array{2, 3, 1, 4}})
    CHECK(t.h2(quad[0], quad[1], quad[2], quad[3]) ==
          doctest::Approx(0.181287));
  CHECK(t.h2(4, 3, 2, 1) == 0.0);
}

TEST_CASE("one-body-only file is valid") {
  auto t = load_integrals_string(
      "norb 4\n"
      "h1 1 1 -1.0\n"
      "h1 2 2 -0.5\n");
  CHECK(t.n_spin_orbitals() == 4);
  CHECK(t.h2_entries().empty());
  CHECK(t.h1(1, 1) == -1.0);
}

TEST_CASE("h1 symmetrization and conflicts") {
  auto t = load_integrals_string(
      "norb 2\n"
      "h1 1 2 0.25\n");
  CHECK(t.h1(2, 1) == doctest::Approx(0.25));
  CHECK_THROWS_AS(load_integrals_string("norb 2\n"
                                        "h1 1 2 0.25\n"
                                        "h1 2 1 0.35\n"),
                  ParseError);
  // identical duplicates are tolerated
  CHECK_NOTHROW(load_integrals_string("norb 2\n"
                                      "h2 1 2 2 1 0.5\n"
                                      "h2 2 1 1 2 0.5\n"));
}

TEST_CASE("parse errors carry line numbers") {
  try {
    load_integrals_string("norb 4\nh1 1 5 0.1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(load_integrals_string("norb 4\nfrobnicate 1\n"), ParseError);
  CHECK_THROWS_AS(load_integrals_string("h1 1 1 0.5\nnorb 4\n"), ParseError);
  CHECK_THROWS_AS(load_integrals_string(""), ParseError);
  CHECK_THROWS_AS(load_integrals_string("norb 4\nh2 1 2 2 0.5\n"), ParseError);
  CHECK_THROWS_AS(load_integrals_string("norb 0\n"), ParseError);
  CHECK_THROWS_AS(load_integrals_string("norb 2\nh1 1 1 zebra\n"), ParseError);
}

TEST_CASE("spin labels: explicit and default alternating") {
  auto t = load_integrals_string("norb 4\n");
  CHECK(t.spin(1) == Spin::Alpha);
  CHECK(t.spin(2) == Spin::Beta);
  CHECK(t.spin(3) == Spin::Alpha);
  CHECK(t.spin(4) == Spin::Beta);
  auto u = load_integrals_string("norb 2\nspin 1 b\nspin 2 a\n");
  CHECK(u.spin(1) == Spin::Beta);
  CHECK(u.spin(2) == Spin::Alpha);
  CHECK_THROWS_AS(load_integrals_string("norb 2\nspin 1 x\n"), ParseError);
}

TEST_CASE("comments, blank lines, eshift") {
  auto t = load_integrals_string(
      "# header comment\n"
      "norb 2   # trailing comment\n"
      "\n"
      "eshift 0.7137\n"
      "h1 1 1 -1.0\n");
  CHECK(t.energy_shift() == doctest::Approx(0.7137));
}

TEST_CASE("spin screen kills mismatched integrals") {
  auto t = load_integrals_string(
      "norb 4\n"
      "h2 1 4 1 4 0.25\n");  // pairs (1,4) and (4,1): alpha vs beta
  CHECK(t.h2(1, 4, 1, 4) == doctest::Approx(0.25));
  CHECK(t.h2_screened(1, 4, 1, 4) == 0.0);
  CHECK(t.h2_screened(1, 4, 4, 1) == 0.0);  // value absent anyway
}

TEST_CASE("bundled molecular file reproduces the published table") {
  auto t = load_integrals_file(data_path("h2_sto3g_1.401.ints"));
  CHECK(t.n_spin_orbitals() == 4);
  CHECK(t.h1(1, 1) == doctest::Approx(-1.252477));
  CHECK(t.h1(2, 2) == doctest::Approx(-1.252477));
  CHECK(t.h1(3, 3) == doctest::Approx(-0.475934));
  CHECK(t.h2(2, 1, 1, 2) == doctest::Approx(0.674493));
  CHECK(t.h2(4, 3, 3, 4) == doctest::Approx(0.697397));
  // the equal-value family of coulomb-type entries
  for (auto quad : {std::array{1, 3, 3, 1}, std::array{1, 4, 4, 1},
                    std::array{2, 3, 3, 2}, std::array{4, 2, 2, 4},
                    std::array{3, 1, 1, 3}, std::array{3, 2, 2, 3},
                    std::array{4, 1, 1, 4}, std::array{2, 4, 4, 2}})
    CHECK(t.h2(quad[0], quad[1], quad[2], quad[3]) ==
          doctest::Approx(0.663472));
  // the exchange/double-excitation family sharing one value
  for (auto quad : {std::array{1, 3, 1, 3}, std::array{2, 4, 2, 4},
                    std::array{3, 2, 4, 1}, std::array{1, 4, 2, 3},
                    std::array{1, 2, 4, 3}})
    CHECK(t.h2(quad[0], quad[1], quad[2], quad[3]) ==
          doctest::Approx(0.181287));
  CHECK(t.energy_shift() == 0.0);
}
